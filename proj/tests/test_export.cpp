#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "gosset/export.hpp"
#include "gosset/verify.hpp"

using namespace gosset;

TEST_CASE("json export of the triangular prism") {
  const auto p = build_polytope(Surface(3));
  const std::string text = export_json(p);
  const nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc.at("r") == 3);
  CHECK(doc.at("vertices").size() == 6);
  CHECK(doc.at("edges").size() == 9);
  CHECK(doc.at("simplexes").at("2").size() == 2);
  REQUIRE(doc.at("crosspolytopes").size() == 3);
  for (const auto& cp : doc.at("crosspolytopes")) {
    CHECK(cp.at("pairs").size() == 2);
    CHECK(cp.at("ruling").size() == 4);
  }
  CHECK(doc.at("vertices")[0] == nlohmann::json::array({0, 0, 0, 1}));
}

TEST_CASE("json export sizes at rank 6") {
  const auto p = build_polytope(Surface(6));
  const nlohmann::json doc = nlohmann::json::parse(export_json(p, 2));
  CHECK(doc.at("vertices").size() == 27);
  CHECK(doc.at("edges").size() == 216);
  CHECK(doc.at("crosspolytopes").size() == 27);
  CHECK(doc.at("simplexes").at("5").size() == 72);
}

TEST_CASE("exports are byte-identical across runs and thread counts") {
  const auto p = build_polytope(Surface(5));
  const std::string a = export_json(p, 1);
  const std::string b = export_json(p, 2);
  const std::string c = export_json(p, 4);
  CHECK(a == b);
  CHECK(b == c);
  CHECK(fnv1a64(a) == fnv1a64(c));
  CHECK(export_csv(p, 1) == export_csv(p, 4));
}

TEST_CASE("csv export shape") {
  const auto p = build_polytope(Surface(3));
  const std::string text = export_csv(p);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "kind,k,indices,coords");
  std::size_t vertices = 0, edges = 0, simplexes = 0, crosses = 0;
  while (std::getline(in, line)) {
    if (line.rfind("vertex,", 0) == 0) ++vertices;
    if (line.rfind("edge,", 0) == 0) ++edges;
    if (line.rfind("simplex,", 0) == 0) ++simplexes;
    if (line.rfind("crosspolytope,", 0) == 0) ++crosses;
  }
  CHECK(vertices == 6);
  CHECK(edges == 9);
  CHECK(simplexes == 2);
  CHECK(crosses == 3);
}

TEST_CASE("verification report serializes and round-trips") {
  verify::Options opt;
  opt.threads = 2;
  const auto fixture = verify::default_fixture();
  const verify::Report report = verify::run_rank_checks(3, fixture, opt);
  CHECK(report.all_pass());

  const std::string dumped = report.to_json().dump(2);
  const std::string redumped = nlohmann::json::parse(dumped).dump(2);
  CHECK(dumped == redumped);

  const std::string text = report.to_text();
  CHECK(text.find("[PASS]") != std::string::npos);
  CHECK(text.find("exhaustive search") != std::string::npos);  // the two-divisor note
}

TEST_CASE("a corrupted fixture fails verification") {
  auto fixture = verify::default_fixture();
  fixture["lines"]["counts"]["3"] = 7;
  verify::Options opt;
  const verify::Report report = verify::run_rank_checks(3, fixture, opt);
  CHECK_FALSE(report.all_pass());
  bool lines_check_failed = false;
  for (const auto& check : report.checks)
    if (check.id == "lines-count" && !check.pass) lines_check_failed = true;
  CHECK(lines_check_failed);
}

TEST_CASE("global theta check passes") {
  verify::Options opt;
  const auto report = verify::run_global_checks(verify::default_fixture(), opt);
  CHECK(report.all_pass());
}
