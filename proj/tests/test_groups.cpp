#include <doctest.h>

#include "kkboot/groups.hpp"

using namespace kkboot;

namespace {

GroupExpr cyc(long n) { return GroupExpr::cyclic(n); }
const GroupExpr Z = GroupExpr::free(1);
const GroupExpr Q = GroupExpr::rationals();
GroupExpr I(Prime p) { return GroupExpr::prufer_group(p); }

} // namespace

TEST_CASE("canonical forms") {
  CHECK(canonicalize(IntMatrix{{6}}) == cyc(6));
  CHECK(canonicalize(IntMatrix{{2, 0}, {0, 3}}) == cyc(6));
  CHECK(canonicalize(IntMatrix(1, 0), 1) == direct_sum(Z, Q));
  CHECK(direct_sum(cyc(2), cyc(2)).fg().factors() == std::vector<Integer>{2, 2});
  CHECK(direct_sum(cyc(2), cyc(3)) == cyc(6));
  CHECK(direct_sum(GroupExpr::zero(), cyc(5)) == cyc(5));
  CHECK(GroupExpr(FGGroup::from_orders(2, {12}), 1, {3, 3}).to_string() ==
        "Z^2 + Z/12 + Q + I(3)^2");
  CHECK(GroupExpr(FGGroup(), 0, {5, 2}).prufer() == std::vector<Prime>{2, 5});
  CHECK_THROWS(GroupExpr(FGGroup(), 0, {4}));
}

TEST_CASE("hom") {
  CHECK(hom(Z, cyc(6)) == GroupValue(cyc(6)));
  CHECK(hom(cyc(4), cyc(6)) == GroupValue(cyc(2)));
  CHECK(hom(cyc(6), Z).is_zero());
  CHECK(hom(cyc(12), I(2)) == GroupValue(cyc(4)));
  CHECK(hom(Q, Z).is_zero());
  CHECK(hom(Q, Q) == GroupValue(Q));
  CHECK(hom(I(3), cyc(9)).is_zero());
  CHECK(hom(I(3), I(5)).is_zero());
  const GroupValue ip = hom(I(3), I(3));
  CHECK_FALSE(ip.is_exact());
  CHECK_FALSE(ip.is_zero());
  CHECK_THROWS_AS((void)ip.exact(), std::logic_error);
  CHECK_FALSE(hom(Q, I(2)).is_exact());
}

TEST_CASE("ext") {
  CHECK(ext(cyc(6), Z) == GroupValue(cyc(6)));
  CHECK(ext(cyc(4), cyc(6)) == GroupValue(cyc(2)));
  CHECK(ext(cyc(4), I(2)).is_zero());
  CHECK(ext(cyc(4), Q).is_zero());
  CHECK(ext(Z, cyc(7)).is_zero());
  CHECK_FALSE(ext(Q, Z).is_exact());
  CHECK(ext(Q, cyc(5)).is_zero());
  CHECK_FALSE(ext(I(2), Z).is_exact());
  CHECK(ext(I(2), cyc(12)) == GroupValue(cyc(4)));
  CHECK(ext(I(2), I(2)).is_zero());
}

TEST_CASE("tensor and tor") {
  CHECK(tensor(Z, cyc(6)) == cyc(6));
  CHECK(tensor(cyc(4), cyc(6)) == cyc(2));
  CHECK(tensor(I(3), cyc(9)).is_zero());
  CHECK(tensor(Q, Q) == Q);
  CHECK(tensor(Q, I(2)).is_zero());
  CHECK(tensor(I(2), Z) == I(2));
  CHECK(tor(Z, cyc(6)).is_zero());
  CHECK(tor(cyc(4), cyc(6)) == cyc(2));
  CHECK(tor(I(3), I(3)) == I(3));
  CHECK(tor(I(3), I(5)).is_zero());
  CHECK(tor(I(2), cyc(12)) == cyc(4));
  CHECK(tor(Q, cyc(6)).is_zero());
}

TEST_CASE("unrepresentable values absorb direct sums") {
  const GroupValue u = GroupValue::unrepresentable("A");
  const GroupValue s = direct_sum(direct_sum(u, GroupValue(cyc(2))),
                                  GroupValue::unrepresentable("B"));
  CHECK_FALSE(s.is_exact());
  CHECK(s.tags() == std::vector<std::string>{"A", "B"});
  CHECK(direct_sum(u, u).tags().size() == 1);
  CHECK(s.to_string() == "nonzero (unrepresentable: A, B)");
}

TEST_CASE("localization") {
  CHECK(localization_vanishes(cyc(9), SpecPoint::prime(2)));
  CHECK_FALSE(localization_vanishes(direct_sum(Z, cyc(9)), SpecPoint::prime(2)));
  CHECK_FALSE(localization_vanishes(I(3), SpecPoint::prime(3)));
  CHECK(localization_vanishes(I(3), SpecPoint::prime(5)));
  CHECK(localization_vanishes(I(3), SpecPoint::zero()));
  CHECK(localization_vanishes(cyc(9), SpecPoint::zero()));
  CHECK_FALSE(localization_vanishes(Q, SpecPoint::zero()));
  CHECK_FALSE(localization_vanishes(Q, SpecPoint::prime(7)));
}

TEST_CASE("injective support") {
  CHECK(injective_support(Z).is_all());
  CHECK(injective_support(cyc(8)) == SpecSubset::of({SpecPoint::prime(2)}));
  CHECK(injective_support(Q) == SpecSubset::of({SpecPoint::zero()}));
  CHECK(injective_support(I(5)) == SpecSubset::of({SpecPoint::prime(5)}));
  CHECK(injective_support(GroupExpr::zero()).is_empty());
}

TEST_CASE("spec points and subsets") {
  CHECK_THROWS_AS(SpecPoint::prime(4), InvalidPoint);
  CHECK_THROWS_AS(SpecPoint::parse(1), InvalidPoint);
  CHECK(SpecPoint::parse(0).is_zero());
  const SpecSubset s = SpecSubset::parse("{3, 2}");
  CHECK(s.to_string() == "{2, 3}");
  CHECK(SpecSubset::parse(s.to_string()) == s);
  CHECK(SpecSubset::parse("all").is_all());
  CHECK(SpecSubset::parse("none").is_empty());
  CHECK(set_union(s, SpecSubset::all()).is_all());
  CHECK(set_intersection(s, SpecSubset::parse("3,5")) == SpecSubset::parse("3"));
  CHECK(s.subset_of(SpecSubset::all()));
  CHECK_FALSE(SpecSubset::all().subset_of(s));
}

TEST_CASE("number theory helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(1000000007));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
  CHECK(prime_divisors(Integer(360)) == std::vector<Prime>{2, 3, 5});
  CHECK(prime_divisors(Integer("1000000016000000063")) == std::vector<Prime>{1000000007, 1000000009});
  CHECK(valuation(Integer(48), 2) == 4);
  CHECK(primes_up_to(13) == std::vector<Prime>{2, 3, 5, 7, 11, 13});
}
