#include <map>

#include <doctest.h>

#include "kkboot/groups.hpp"
#include "kkboot/oracle.hpp"
#include "kkboot/verify.hpp"

using namespace kkboot;

TEST_CASE("brute force examples") {
  const FGGroup v4 = FGGroup::from_orders(0, {2, 2});
  CHECK(oracle_bifunctor(Bifunctor::Hom, v4, FGGroup::cyclic(2)) == v4);
  CHECK(oracle_bifunctor(Bifunctor::Tensor, FGGroup::cyclic(2), FGGroup::cyclic(3)).is_zero());
  CHECK(oracle_bifunctor(Bifunctor::Tor, FGGroup::cyclic(6), FGGroup::cyclic(15)) ==
        FGGroup::cyclic(3));
  for (Bifunctor b : {Bifunctor::Hom, Bifunctor::Ext, Bifunctor::Tensor, Bifunctor::Tor})
    CHECK(oracle_bifunctor(b, FGGroup::cyclic(4), FGGroup::cyclic(6)) == FGGroup::cyclic(2));
  CHECK(oracle_bifunctor(Bifunctor::Ext, FGGroup::cyclic(8), FGGroup::from_orders(0, {4, 2})) ==
        FGGroup::from_orders(0, {4, 2}));
  CHECK(oracle_bifunctor(Bifunctor::Hom, FGGroup(), FGGroup::cyclic(5)).is_zero());
}

TEST_CASE("bounds") {
  CHECK_THROWS_AS(oracle_bifunctor(Bifunctor::Hom, FGGroup::free(1), FGGroup::cyclic(2)),
                  BoundExceeded);
  CHECK_THROWS_AS(oracle_bifunctor(Bifunctor::Hom, FGGroup::cyclic(128), FGGroup::cyclic(2)),
                  BoundExceeded);
  CHECK_NOTHROW(oracle_bifunctor(Bifunctor::Hom, FGGroup::cyclic(128), FGGroup::cyclic(2), 128));
}

TEST_CASE("bifunctor names") {
  CHECK(parse_bifunctor("TOR") == Bifunctor::Tor);
  CHECK(to_string(Bifunctor::Ext) == "ext");
  CHECK_THROWS(parse_bifunctor("cohom"));
}

TEST_CASE("tables agree with brute force on every pair up to order 16") {
  const auto groups = verify::finite_groups_up_to(16);
  for (const auto &g : groups)
    for (const auto &h : groups) {
      const GroupExpr ge(g), he(h);
      CAPTURE(g.to_string());
      CAPTURE(h.to_string());
      CHECK(hom(ge, he) == GroupValue(GroupExpr(oracle_bifunctor(Bifunctor::Hom, g, h))));
      CHECK(ext(ge, he) == GroupValue(GroupExpr(oracle_bifunctor(Bifunctor::Ext, g, h))));
      CHECK(tensor(ge, he) == GroupExpr(oracle_bifunctor(Bifunctor::Tensor, g, h)));
      CHECK(tor(ge, he) == GroupExpr(oracle_bifunctor(Bifunctor::Tor, g, h)));
    }
}

TEST_CASE("group enumeration counts isomorphism classes") {
  // Number of abelian groups of order n is the product of partition numbers.
  const auto groups = verify::finite_groups_up_to(16);
  std::map<Integer, int> by_order;
  for (const auto &g : groups)
    ++by_order[g.torsion_order()];
  CHECK(by_order[1] == 1);
  CHECK(by_order[8] == 3);
  CHECK(by_order[12] == 2);
  CHECK(by_order[16] == 5);
  CHECK(by_order[15] == 1);
}
