#include <doctest.h>

#include "k3cm/errors.hpp"
#include "k3cm/snf.hpp"

using namespace k3cm;

namespace {

bool kills(const IntMat& a, const std::vector<Int>& v, const Int& modulus) {
  for (const auto& row : a) {
    Int acc = 0;
    for (size_t j = 0; j < row.size(); ++j) acc += row[j] * v[j];
    if (mod_reduce(acc, modulus) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("diagonal valuations over Z/p^N") {
  CHECK(smith_normal_form({{Int(5), Int(0)}, {Int(0), Int(1)}}, Int(5), 4,
                          false)
            .diag_val == std::vector<int>{0, 1});

  CHECK(smith_normal_form({{Int(0), Int(0)}, {Int(0), Int(0)}}, Int(3), 5,
                          false)
            .diag_val == std::vector<int>{5, 5});

  // det = -8, content 2: valuations 1 and 2
  CHECK(smith_normal_form({{Int(2), Int(4)}, {Int(6), Int(8)}}, Int(2), 6,
                          false)
            .diag_val == std::vector<int>{1, 2});

  // entries are reduced mod p^N first
  CHECK(smith_normal_form({{Int(81)}}, Int(3), 4, false).diag_val ==
        std::vector<int>{4});

  CHECK(smith_normal_form({{Int(1), Int(0), Int(0)}, {Int(0), Int(7), Int(0)}},
                          Int(7), 3, false)
            .diag_val == std::vector<int>{0, 1});
}

TEST_CASE("free kernel basis") {
  const Int p(3);
  const int N = 4;
  const Int q = pow_int(p, N);

  IntMat a = {{Int(1), Int(1)}, {Int(1), Int(1)}};
  auto basis = free_kernel_basis(a, p, N);
  REQUIRE(basis.size() == 1);
  CHECK(kills(a, basis[0], q));
  // the generator is unimodular: some coordinate is a unit
  bool unit = false;
  for (const auto& c : basis[0]) unit = unit || c % p != 0;
  CHECK(unit);

  IntMat id = {{Int(1), Int(0)}, {Int(0), Int(1)}};
  CHECK(free_kernel_basis(id, p, N).empty());

  IntMat zero = {{Int(0), Int(0)}, {Int(0), Int(0)}};
  auto full = free_kernel_basis(zero, p, N);
  CHECK(full.size() == 2);

  // p * x = 0 has torsion kernel p^{N-1} Z / p^N Z
  IntMat tor = {{Int(3)}};
  CHECK_THROWS_AS(free_kernel_basis(tor, p, N), internal_error);
}
