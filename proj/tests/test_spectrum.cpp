#include <doctest.h>

#include "kkboot/spectrum.hpp"

using namespace kkboot;

namespace {

SpecSubset S(const char *text) { return SpecSubset::parse(text); }
BootObject moore(long n) { return moore_object(n); }
BootObject kappa(std::uint64_t p) { return residue_object(SpecPoint::parse(p)); }
BootObject iota(std::uint64_t p) { return injective_object(SpecPoint::parse(p)); }

} // namespace

TEST_CASE("support") {
  CHECK(supp(unit()).is_all());
  CHECK(supp(moore(12)) == S("2,3"));
  CHECK(supp(iota(3)) == S("3"));
  CHECK(supp(kappa(0)) == S("0"));
  CHECK(supp(coproduct({})).is_empty());
  CHECK(supp_injective(unit()).is_all());
  CHECK(supp_injective(suspend(moore(8))) == S("2"));
  CHECK(supp_injective(kappa(0)) == S("0"));
}

TEST_CASE("membership") {
  CHECK(member(moore(12), {S("2,3")}));
  CHECK_FALSE(member(moore(12), {S("2")}));
  CHECK(member(coproduct({}), {S("")}));
  CHECK(member_bootV(kappa(0), S("0")));
  CHECK_FALSE(member_bootV(unit(), S("2,3,5,7")));
  CHECK(member_bootV(moore(9), S("3,5")));
}

TEST_CASE("localization kernel") {
  CHECK_FALSE(localization_kernel_member(kappa(0), S("2,3,5,7,11,13")));
  CHECK(localization_kernel_member(moore(9), S("3")));
  CHECK(localization_kernel_member(unit(), SpecSubset::all()));
  CHECK_FALSE(localization_kernel_member(iota(5), S("3")));
  CHECK(localization_kernel_member(iota(5), S("5")));
  CHECK_THROWS_AS(localization_kernel_member(unit(), S("0,2")), NotSpecializationClosed);
}

TEST_CASE("specialization closure and smashing") {
  CHECK(is_specialization_closed(S("2,3,5")));
  CHECK_FALSE(is_specialization_closed(S("0")));
  CHECK(is_specialization_closed(SpecSubset::all()));
  CHECK(specialization_closure(S("2")) == S("2"));
  CHECK(specialization_closure(S("0,2")).is_all());
  CHECK(is_smashing({S("2,3")}));
  CHECK_FALSE(is_smashing({S("0")}));
  CHECK(is_smashing({SpecSubset::all()}));
}

TEST_CASE("generation") {
  CHECK(generated_support({kappa(2), kappa(5)}) == S("2,5"));
  CHECK(generated_support({unit()}).is_all());
  CHECK(generated_support({}).is_empty());
  CHECK(in_generated(moore(4), {kappa(2)}));
  CHECK_FALSE(in_generated(kappa(3), {kappa(2)}));
  // A finite residue family never reaches the unit.
  CHECK_FALSE(in_generated(unit(), {kappa(0), kappa(2), kappa(3)}));
}

TEST_CASE("orthogonal residues") {
  const PointSet two = orthogonal_residues({S("2")});
  for (std::uint64_t p : {0, 3, 5})
    CHECK(two.contains(SpecPoint::parse(p)));
  CHECK_FALSE(two.contains(SpecPoint::prime(2)));
  CHECK(two.to_string() == "All \\ {2}");
  const PointSet all = orthogonal_residues({SpecSubset::all()});
  CHECK_FALSE(all.contains(SpecPoint::zero()));
  CHECK_FALSE(all.contains(SpecPoint::prime(7)));
  CHECK(orthogonal_residues({S("")}).contains(SpecPoint::prime(2)));
}

TEST_CASE("support datum") {
  const auto results = support_datum_check({moore(12), moore(10), unit(), suspend(kappa(3))});
  REQUIRE(results.size() == 6);
  for (const auto &r : results) {
    CAPTURE(r.name);
    CAPTURE(r.witness);
    CHECK(r.pass);
  }
  CHECK(supp(tensor_object(moore(12), moore(10))) == S("2"));
  CHECK_THROWS_AS(support_datum_check({iota(2)}), NonCompactInput);
}

TEST_CASE("thick classification") {
  const ThickClassificationReport small = thick_classification_demo(3);
  CHECK(small.subsets.size() == 5);
  CHECK(small.distinct_classes == 5);
  CHECK(small.pass());
  const ThickClassificationReport big = thick_classification_demo(13);
  CHECK(big.distinct_classes == 65);
  CHECK(big.pass());
  CHECK_THROWS(thick_classification_demo(1));
}
