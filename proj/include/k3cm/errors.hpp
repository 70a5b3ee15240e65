#pragma once

#include <stdexcept>
#include <string>

namespace k3cm {

/* Rejected input: the caller handed data outside an operation's domain. */
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/* Mathematically inconsistent data: individually valid pieces that contradict
   each other (e.g. assumptions forcing an unramified place at a ramified one). */
struct inconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* A structural guarantee of the implementation failed; always a bug. */
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace k3cm
