#include <doctest.h>

#include "pact/dsl.hpp"

using namespace pact;
using namespace pact::dsl;

namespace {

const char* kCounterDoc = R"(
field rationals
group g2 = cyclic 2
algebra A = constants 4 { 2 4 -> 3:1 ; 4 2 -> 3:1 } unit e1
ideal I = span(A; e3, e4)
action ax on A by g2 { g: ideal = I, map = e3 -> e4, e4 -> e3 }
cmd verify ax
cmd assoc ax expect false
)";

}  // namespace

TEST_CASE("minimal document parses and runs") {
  SpecDocument doc = parse_spec("field rationals\nalgebra m = matrix 2\ncmd semiprime m\n");
  CHECK(doc.algebras.size() == 1);
  Report rep = run(doc);
  REQUIRE(rep.results.size() == 1);
  CHECK(rep.results[0]["semiprime"] == true);
  CHECK(rep.all_ok());
}

TEST_CASE("the counterexample document reproduces the paper verdict") {
  SpecDocument doc = parse_spec(kCounterDoc);
  Report rep = run(doc);
  REQUIRE(rep.results.size() == 2);
  CHECK(rep.results[0]["valid"] == true);
  CHECK(rep.results[1]["associative"] == false);
  CHECK(rep.results[1]["agrees"] == true);
  CHECK(rep.all_ok());
}

TEST_CASE("positioned diagnostics") {
  try {
    parse_spec("field rationals\ngroup x = cyclic\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_spec("group g = cyclic 2\n"), ParseError);  // field first
  CHECK_THROWS_AS(parse_spec("field rationals\nfield gf 5\n"), ParseError);
  CHECK_THROWS_AS(parse_spec("field rationals\nbogus x\n"), ParseError);
  // undefined names are positioned parse errors
  try {
    parse_spec("field rationals\ncmd semiprime nowhere\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_spec("field rationals\ngroup a = cyclic 2\ngroup a = klein\n"),
                  ParseError);  // duplicate name
  CHECK_THROWS_AS(
      parse_spec("field rationals\nalgebra x = group_algebra nowhere\n"),
      ParseError);  // forward/undefined group
}

TEST_CASE("parse-print round trip") {
  SpecDocument doc = parse_spec(kCounterDoc);
  std::string printed = print_spec(doc);
  SpecDocument again = parse_spec(printed);
  CHECK(print_spec(again) == printed);
}

TEST_CASE("parse-print round trip across the whole grammar") {
  const char* wide = R"(
field gf 5
group z2 = cyclic 2
group z3 = cyclic 3
group v = klein
group z6 = product z2 z3
group t = table 2 { 0 1 ; 1 0 }
algebra m = matrix 2
algebra mh = matrix 2 over z2
algebra u = upper 3
algebra k = product 3
algebra ga = group_algebra z3
algebra c = constants 2 { 1 1 -> 1:1 ; 1 2 -> 2:1 ; 2 1 -> 2:1 ; 2 2 -> 2:3 }
action tv on k by z2 { g: ideal = full, map = id }
ideal j = span(u; e3, 2*e2 - e3)
cmd verify tv
cmd semiprime m expect true
cmd elementary z3 {1,g} expect iso
cmd kpar z2 expect 3
)";
  SpecDocument doc = parse_spec(wide);
  std::string printed = print_spec(doc);
  SpecDocument again = parse_spec(printed);
  CHECK(print_spec(again) == printed);
  // and the document actually runs
  CHECK(run(doc).all_ok());
}

TEST_CASE("determinism: two runs emit identical bytes") {
  SpecDocument doc = parse_spec(kCounterDoc);
  std::string a = emit(run(doc), Format::json);
  std::string b = emit(run(doc), Format::json);
  CHECK(a == b);
}

TEST_CASE("empty report") {
  SpecDocument doc = parse_spec("field rationals\n");
  std::string bytes = emit(run(doc), Format::json);
  CHECK(bytes == "{\n  \"schema_version\": 1,\n  \"results\": []\n}\n");
}

TEST_CASE("text format emits one line per command") {
  SpecDocument doc = parse_spec(kCounterDoc);
  std::string text = emit(run(doc), Format::text);
  CHECK(text.find("ok   verify ax") != std::string::npos);
  CHECK(text.find("ALL OK") != std::string::npos);
}

TEST_CASE("expectation mismatches flip the exit verdict") {
  SpecDocument doc =
      parse_spec("field rationals\nalgebra m = matrix 2\ncmd semiprime m expect false\n");
  Report rep = run(doc);
  CHECK_FALSE(rep.all_ok());
}

TEST_CASE("gf fields flow through") {
  SpecDocument doc = parse_spec(
      "field gf 5\nalgebra k = product 3\ncmd semiprime k expect true\n"
      "algebra t = upper 2\ncmd lr_assoc t expect true\n");
  Report rep = run(doc);
  CHECK(rep.all_ok());
}
