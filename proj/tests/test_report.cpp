#include "doctest.h"

#include "gw/group_expr.hpp"
#include "gw/report.hpp"

using namespace gw;

TEST_CASE("width report JSON schema round trips") {
  PermGroup g = evaluate(*parse_group_expr("S(4)"));
  WidthReport r = width(g);
  nlohmann::json j = to_json(r);
  CHECK(j["width"] == 3);
  CHECK(j["confidence"] == "proved");
  REQUIRE(j["factors"].size() == 4);
  CHECK(j["factors"][0].contains("label"));
  CHECK(j["factors"][0].contains("order"));
  CHECK(j["factors"][0].contains("mu"));

  // round trip through the documented schema
  nlohmann::json j2 = nlohmann::json::parse(j.dump());
  CHECK(j2 == j);

  // text and JSON agree on the width value
  std::string text = render_text(r);
  CHECK(text.find("width: 3") != std::string::npos);
}

TEST_CASE("oracle chain serialization") {
  PermGroup g = evaluate(*parse_group_expr("A(4)"));
  WidthReport r = width_oracle(g);
  nlohmann::json j = to_json(r);
  REQUIRE(j.contains("chain"));
  REQUIRE(j["chain"].size() == 4); // A4 > V4 > C2 > 1
  // generators serialize in cycle notation and parse back
  for (const auto &link : j["chain"])
    for (const auto &gen : link)
      CHECK_NOTHROW(Perm::parse_cycles(gen.get<std::string>(), 12));
}

TEST_CASE("certificate JSON carries evidence") {
  ZPoly f = parse_zpoly("x^3 - 2");
  GaloisCertificate cert = certify_group(f);
  nlohmann::json j = to_json(cert);
  CHECK(j["claim"] == "symmetric(3)");
  CHECK(j["evidence"].size() >= 1);
  CHECK(j["discriminant_square"] == false);
}

TEST_CASE("monodromy JSON carries branch points and permutations") {
  MonodromyResult m = monodromy_group(ParametricFamily::parse("y^3 - p"));
  nlohmann::json j = to_json(m);
  CHECK(j["branch_points"].size() == 1);
  CHECK(j["permutations"].size() == 1);
  CHECK(j["group_order"] == "3");
  CHECK(j["transitive"] == true);
}
