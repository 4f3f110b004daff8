#include <doctest.h>

#include "kkboot/model.hpp"
#include "kkboot/report.hpp"

using namespace kkboot;

namespace {

RunReport sample() {
  RunReport r;
  r.command = "kk";
  r.inputs = {"iota(2)", "unit"};
  r.set_graded(kk_groups(injective_object(SpecPoint::prime(2)), unit()));
  r.notes["ext_term_vanishes"] = "false";
  PropertyResult p("example");
  p.expect(true, "a");
  p.expect(false, "b \"quoted\"");
  r.properties.push_back(p);
  r.seconds = 0.25;
  return r;
}

} // namespace

TEST_CASE("json round trip") {
  const RunReport r = sample();
  const RunReport back = RunReport::from_json(r.to_json());
  CHECK(back.same_content(r));
  CHECK(back.to_json() == r.to_json());
  CHECK(back.unrepresentable.size() == 1);
  CHECK(back.properties.at(0).witness == "b \"quoted\"");
  CHECK(back.properties.at(0).checked == 2);
  CHECK_FALSE(back.seconds.has_value());
}

TEST_CASE("every result kind round trips") {
  RunReport r;
  r.command = "x";
  r.set_set("{2, 3}");
  CHECK(RunReport::from_json(r.to_json()).same_content(r));
  r.set_bool(true);
  CHECK(RunReport::from_json(r.to_json()).same_content(r));
  r.set_group("Z/3");
  CHECK(RunReport::from_json(r.to_json()).same_content(r));
  r.set_graded(GradedGroup{GroupExpr::cyclic(2), GroupExpr::free(1)});
  CHECK(RunReport::from_json(r.to_json()).same_content(r));
  r.kind = RunReport::ResultKind::None;
  CHECK(RunReport::from_json(r.to_json()).same_content(r));
}

TEST_CASE("json leaves timing out") {
  RunReport a = sample(), b = sample();
  b.seconds = 99.0;
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_json().find("0.25") == std::string::npos);
}

TEST_CASE("text and json carry the same content") {
  const RunReport r = sample();
  const std::string text = r.to_text();
  CHECK(text.find("degree 1: nonzero (unrepresentable: ") != std::string::npos);
  CHECK(text.find("[FAIL] example") != std::string::npos);
  CHECK(text.find("ext_term_vanishes: false") != std::string::npos);
  CHECK(text.find("0/1 properties passed") != std::string::npos);
  CHECK(r.to_json().find("\"deg0\": \"0\"") != std::string::npos);
  CHECK(r.failures() == 1);
  CHECK_FALSE(r.all_pass());
}
