#pragma once

/* p-adic valuations and Newton polygons of rational polynomials.

   Slope convention: a segment's slope is the common valuation of the roots it
   accounts for, i.e. the negative of the raw slope of the lower convex hull of
   the points (i, v_p(c_i)). Segments are listed with slopes strictly
   increasing and their lengths sum to the degree. */

#include <vector>

#include "k3cm/poly.hpp"

namespace k3cm {

struct PadicValuation {
  Int prime;
  bool infinite = false;  // valuation of zero
  Rat value;              // meaningful when !infinite
};

PadicValuation padic_valuation(const Int& n, const Int& p);
PadicValuation padic_valuation(const Rat& q, const Int& p);

struct NewtonSegment {
  Rat slope;        // root valuation
  unsigned length;  // number of roots with that valuation
};

struct NewtonPolygon {
  Int prime;
  std::vector<NewtonSegment> segments;
  unsigned total_length() const;
  // multiplicity of roots with valuation strictly greater than zero
  unsigned positive_length() const;
  unsigned negative_length() const;
  unsigned zero_length() const;
};

// rejects the zero polynomial and polynomials with zero constant term
NewtonPolygon newton_polygon(const RationalPoly& f, const Int& p);

}  // namespace k3cm
