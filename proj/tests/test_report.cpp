#include "doctest.h"
#include "pds/error.hpp"
#include "pds/report.hpp"

using namespace pds;

namespace {
Rational R(long a, long b = 1) { return make_rational(a, b); }
}  // namespace

TEST_CASE("step function files") {
  auto phi = parse_step_json(R"({"zeta_order": 1, "pieces": [
      {"from": "0", "to": "1/2", "value": "1"}, {"from": "1/2", "to": "1", "value": "0"}]})");
  CHECK(phi == indicator(R(0), R(1, 2)));
  auto w = parse_step_json(R"({"zeta_order": 3, "pieces": [
      {"from": "0", "to": "1/7", "value": "0"}, {"from": "1/7", "to": "3/7", "value": "1"},
      {"from": "3/7", "to": "5/7", "value": "-zeta"}, {"from": "5/7", "to": "1", "value": "0"}]})");
  CHECK(w == linear_combine({{CycloNumber(1L), indicator(R(1, 7), R(3, 7))}, {-root_of_unity(3, 1), indicator(R(3, 7), R(5, 7))}}));
  CHECK(parse_step_json(step_to_json(w).dump()) == w);
  auto i4 = parse_step_json(R"({"zeta_order": 4, "pieces": [{"from": "0", "to": "1", "value": "1 + i"}]})");
  CHECK(i4.piece_values()[0] == CycloNumber(1L) + root_of_unity(4, 1));
}

TEST_CASE("malformed files") {
  try {
    parse_step_json("{\n  \"pieces\": [\n    {\"from\": 0,, }\n]}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 1);
  }
  CHECK_THROWS_AS(parse_step_json(R"({"zeta_order": 1})"), ParseError);
  CHECK_THROWS_AS(parse_step_json(R"({"pieces": [{"from": "0", "to": "1"}]})"), ParseError);
  CHECK_THROWS_AS(parse_step_json(R"({"pieces": [{"from": "0", "to": "1", "value": "zeta +"}]})"), ParseError);
  CHECK_THROWS_AS(parse_step_json(R"({"pieces": [{"from": "0", "to": "1/2", "value": "1"}]})"), InvalidArgument);
  CHECK_THROWS_AS(parse_step_json(R"({"zeta_order": 0, "pieces": []})"), ParseError);
}

TEST_CASE("verdict json") {
  auto v = decide_completeness(indicator(R(0), R(1, 2)));
  Json j = verdict_to_json(v);
  CHECK(j["status"] == "Complete");
  CHECK(j["character"]["modulus"] == 1);
  CHECK(j["character"]["conductor"] == 1);
  CHECK(j["certificate"]["kind"] == "Dominance");
  CHECK(j["polynomial"]["terms"].size() == 3);
  CHECK(j["reasons"].empty());

  DecideOptions cert;
  cert.mode = DecideMode::Certify;
  Json k = verdict_to_json(decide_completeness(indicator(R(0), R(1, 3)), cert));
  CHECK(k["status"] == "Incomplete");
  CHECK(k["reasons"][0] == "HasZeroInC0");
  CHECK(k["certificate"]["kind"] != "None");

  Json s = verdict_to_json(decide_completeness(indicator(R(1, 4), R(3, 4))));
  CHECK(s["character"]["modulus"] == 8);
  CHECK(s["character"]["values"][2] == "-1");
  // deterministic bytes
  CHECK(verdict_to_json(decide_completeness(indicator(R(1, 4), R(3, 4)))).dump() == s.dump());
}

TEST_CASE("certificate kinds serialize") {
  auto p = DirichletPoly({{1, CycloNumber(1L)}, {2, CycloNumber(1L)}, {3, CycloNumber(1L)}, {6, CycloNumber(-1L)}});
  auto w = interior_zero_search(bohr_lift(p), R(1, 10), 64);
  REQUIRE(w.has_value());
  Json j = certificate_to_json(*w);
  CHECK(j["kind"] == "InteriorWitness");
  CHECK(j["point"].size() == 2);
  auto t = twist_idempotent_reject(p);
  REQUIRE(t.has_value());
  CHECK(certificate_to_json(*t)["kind"] == "NegativityTwist");
  auto u = decide_zero_free(DirichletPoly({{1, CycloNumber(1L)}, {2, CycloNumber(3L)}}));
  Json uj = zero_verdict_to_json(u);
  CHECK(uj["status"] == "HasZero");
}

TEST_CASE("scan reports") {
  auto r = scan_intervals(2);
  Json j = scan_to_json(r);
  CHECK(j["examined"] == 3);
  CHECK(j["complete"].size() == 3);
  std::string csv = scan_to_csv(r);
  CHECK(csv.rfind("descriptor,status,certificate\n", 0) == 0);
  CHECK(csv.find("\"(0,1/2)\",Complete,Dominance") != std::string::npos);
  CHECK(scan_summary(r) == "examined=3 complete=3 incomplete=0 undetermined=0");
  CHECK(scan_to_table(r).find("(1/2,1)") != std::string::npos);
}
