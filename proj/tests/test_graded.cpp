#include <doctest.h>

#include "kkboot/graded.hpp"

using namespace kkboot;

namespace {

GradedGroup at(long n, Degree e) { return place(GroupExpr::cyclic(n), e); }
GradedGroup zat(Degree e) { return place(GroupExpr::free(1), e); }
GradedValue val(const GradedGroup &g) { return to_value(g); }

} // namespace

TEST_CASE("placement and suspension") {
  CHECK(at(3, kEven).deg0 == GroupExpr::cyclic(3));
  CHECK(at(3, kEven).deg1.is_zero());
  CHECK(place(GroupExpr::zero(), kOdd).is_zero());
  const GradedGroup g{GroupExpr::cyclic(2), GroupExpr::free(1)};
  CHECK(suspend(g) == GradedGroup{GroupExpr::free(1), GroupExpr::cyclic(2)});
  CHECK(suspend(suspend(g)) == g);
  CHECK(suspend(GradedGroup{}).is_zero());
  CHECK(g.to_string() == "(Z/2; Z)");
}

TEST_CASE("graded hom") {
  const GradedGroup n{GroupExpr::cyclic(6), GroupExpr::free(2)};
  CHECK(graded_hom(zat(kEven), n) == val(n));
  CHECK(graded_hom(at(2, kOdd), at(4, kEven)) ==
        GradedValue{GroupExpr::zero(), GroupExpr::cyclic(2)});
  CHECK(graded_hom(place(GroupExpr::rationals(), kEven), at(3, kEven)).is_zero());
}

TEST_CASE("graded ext") {
  CHECK(graded_ext(at(5, kEven), at(5, kEven)) == val(at(5, kEven)));
  CHECK(graded_ext(direct_sum(zat(kEven), zat(kOdd)), at(7, kOdd)).is_zero());
  CHECK(graded_ext(at(4, kOdd), at(6, kEven)) ==
        GradedValue{GroupExpr::zero(), GroupExpr::cyclic(2)});
}

TEST_CASE("graded tensor") {
  const GradedGroup n{GroupExpr::cyclic(6), GroupExpr::free(2)};
  CHECK(graded_tensor(zat(kEven), n) == n);
  CHECK(graded_tensor(at(3, kEven), at(3, kOdd)) == at(3, kOdd));
  CHECK(graded_tensor(at(2, kOdd), at(2, kOdd)) == at(2, kEven));
}

TEST_CASE("graded tor") {
  CHECK(graded_tor(direct_sum(zat(kEven), zat(kOdd)), at(9, kEven)).is_zero());
  CHECK(graded_tor(at(3, kEven), at(3, kEven)) == at(3, kEven));
  CHECK(graded_tor(at(2, kEven), at(2, kOdd)) == at(2, kOdd));
}

TEST_CASE("unrepresentable pieces stay tagged") {
  const GradedValue v = graded_ext(place(GroupExpr::prufer_group(2), kEven), zat(kEven));
  CHECK_FALSE(v.deg0.is_exact());
  CHECK(v.deg1.is_zero());
  CHECK_FALSE(v.is_exact());
  CHECK(suspend(v).deg1 == v.deg0);
}
