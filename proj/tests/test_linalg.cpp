#include <doctest.h>

#include "kkboot/fg_group.hpp"
#include "kkboot/linalg.hpp"

using namespace kkboot;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  return {xs.begin(), xs.end()};
}

void check_snf(const IntMatrix &m) {
  const SNFResult r = smith_normal_form(m);
  CHECK(r.U * m * r.V == IntMatrix::diagonal(m.rows(), m.cols(), r.d));
  CHECK(r.U * r.U_inv == IntMatrix::identity(m.rows()));
  for (std::size_t i = 0; i + 1 < r.d.size(); ++i) {
    CHECK(r.d[i] >= 0);
    if (r.d[i] != 0)
      CHECK(r.d[i + 1] % r.d[i] == 0);
    else
      CHECK(r.d[i + 1] == 0);
  }
}

} // namespace

TEST_CASE("smith normal form of small matrices") {
  SUBCASE("empty") {
    const SNFResult r = smith_normal_form(IntMatrix(0, 0));
    CHECK(r.d.empty());
    CHECK(r.U.rows() == 0);
    CHECK(r.V.cols() == 0);
  }
  SUBCASE("identity") {
    const SNFResult r = smith_normal_form(IntMatrix::identity(2));
    CHECK(r.d == ints({1, 1}));
    CHECK(r.U == IntMatrix::identity(2));
    CHECK(r.V == IntMatrix::identity(2));
  }
  SUBCASE("2 4 / 6 8") {
    const IntMatrix m{{2, 4}, {6, 8}};
    CHECK(smith_normal_form(m).d == ints({2, 4}));
    check_snf(m);
  }
  SUBCASE("rank deficient") {
    const IntMatrix m{{2, 4, 6}, {1, 2, 3}};
    const SNFResult r = smith_normal_form(m);
    CHECK(r.d == ints({1, 0}));
    CHECK(r.rank() == 1);
    check_snf(m);
  }
  SUBCASE("divisibility fix-up") {
    const IntMatrix m{{2, 0}, {0, 3}};
    CHECK(smith_normal_form(m).d == ints({1, 6}));
    check_snf(m);
  }
  SUBCASE("zero and wide") {
    check_snf(IntMatrix(3, 2));
    check_snf(IntMatrix{{0, 0, 5, 10}});
    check_snf(IntMatrix{{4}, {6}, {9}});
  }
}

TEST_CASE("cokernel invariants") {
  CHECK(cokernel_invariants(IntMatrix{{6}}) == FGGroup::cyclic(6));
  const FGGroup g = cokernel_invariants(IntMatrix{{2}, {0}});
  CHECK(g.rank() == 1);
  CHECK(g.factors() == ints({2}));
  CHECK(cokernel_invariants(IntMatrix(3, 0)) == FGGroup::free(3));
  CHECK(cokernel_invariants(IntMatrix{{1, 0}, {0, 1}}).is_zero());
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(IntMatrix::identity(3)).cols() == 0);
  const IntMatrix k1 = kernel_basis(IntMatrix{{1, -1}});
  REQUIRE(k1.cols() == 1);
  CHECK(k1 == IntMatrix{{1}, {1}});
  const IntMatrix k2 = kernel_basis(IntMatrix{{2, 4}});
  REQUIRE(k2.cols() == 1);
  CHECK(k2 == IntMatrix{{2}, {-1}});
  const IntMatrix m{{1, 2, 3}, {2, 4, 6}};
  const IntMatrix k3 = kernel_basis(m);
  CHECK(k3.cols() == 2);
  CHECK((m * k3).is_zero());
}

TEST_CASE("column lattice basis") {
  const IntMatrix b = column_lattice_basis(IntMatrix{{2, 4}, {0, 0}});
  REQUIRE(b.cols() == 1);
  CHECK(cokernel_invariants(b) == cokernel_invariants(IntMatrix{{2}, {0}}));
  CHECK(column_lattice_basis(IntMatrix(2, 3)).cols() == 0);
}

TEST_CASE("determinant") {
  CHECK(IntMatrix{{2, 4}, {6, 8}}.determinant() == -8);
  CHECK(IntMatrix::identity(4).determinant() == 1);
  CHECK(IntMatrix{{1, 2}, {2, 4}}.determinant() == 0);
  CHECK(IntMatrix(0, 0).determinant() == 1);
}

TEST_CASE("finitely generated groups") {
  CHECK(FGGroup::from_orders(0, ints({2, 2})).factors() == ints({2, 2}));
  CHECK(FGGroup::from_orders(0, ints({2, 3})).factors() == ints({6}));
  CHECK(FGGroup::from_orders(0, ints({4, 6, 9})).factors() == ints({6, 36}));
  CHECK(direct_sum(FGGroup(), FGGroup::cyclic(5)) == FGGroup::cyclic(5));
  CHECK(FGGroup::from_orders(2, ints({12, 8})).to_string() == "Z^2 + Z/4 + Z/24");
  CHECK(FGGroup().to_string() == "0");
  CHECK(FGGroup::from_orders(0, ints({1, 1})).is_zero());
  const FGGroup g = FGGroup::from_orders(1, ints({4}));
  CHECK(g.generator_count() == 2);
  CHECK(g.generator_order(0) == 4);
  CHECK(g.generator_order(1) == 0);
  CHECK(g.torsion_order() == 4);
}
