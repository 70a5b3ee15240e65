#pragma once

/* Exact integer / rational helpers shared by every module. Integers and
   rationals are GMP classes; mpq_class values are kept canonical (lowest
   terms, positive denominator) at every boundary. */

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "k3cm/errors.hpp"

namespace k3cm {

using Int = mpz_class;
using Rat = mpq_class;

// p-adic valuation of a nonzero integer / rational; p must be >= 2.
long val_p(const Int& n, const Int& p);
long val_p(const Rat& q, const Int& p);

bool is_prime(const Int& n);

Int pow_int(const Int& base, unsigned long e);

// inverse of a mod m (m > 1); throws invalid_input when gcd(a, m) != 1
Int inv_mod(const Int& a, const Int& m);

Int mod_reduce(const Int& a, const Int& m);  // representative in [0, m)

// Kronecker symbol (a|m); rejects m == 0.
int kronecker_symbol(const Int& a, const Int& m);

// factorization by trial division; rejects |n| > 10^12 (enough for every
// discriminant this library handles) so the loop stays bounded
std::vector<std::pair<Int, int>> factorize(const Int& n);

Int euler_phi(const Int& n);

// largest squarefree divisor, sign preserved; n != 0
Int squarefree_kernel(const Int& n);

// discriminant of Q(sqrt(d)); rejects d = 0 and perfect squares
Int fundamental_discriminant(const Int& d);
bool is_fundamental_discriminant(const Int& d);

// multiplicative order of a mod n (n >= 1, gcd(a, n) = 1)
long multiplicative_order(const Int& a, const Int& n);

// exact string forms: integers as base-10, rationals as "num/den" ("3", "29/5")
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);
Int int_from_string(const std::string& s);

}  // namespace k3cm
