#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gosset/enumerate.hpp"
#include "gosset/picard.hpp"

namespace gosset::oracle {

/// Independent reference enumeration: a plain scan of the coordinate box
/// [-bound, bound]^{r+1}, bucketing every class whose pair
/// (self-intersection, K-degree) lies within |value| <= cap. Classes appear
/// in canonical order. This path shares nothing with solve_classes.
using BoxTable = std::map<std::pair<std::int64_t, std::int64_t>, std::vector<DivisorClass>>;
BoxTable box_scan(const Surface& s, std::int64_t bound, std::int64_t cap);

}  // namespace gosset::oracle

namespace gosset::verify {

struct CheckResult {
  std::string id;
  int r = 0;  // 0 for rank-independent checks
  std::string expected;
  std::string source;  // where the expected value comes from: a fixture
                       // group's label, or "invariant" for internal identities
  std::string computed;
  bool pass = false;
  bool skipped = false;
  std::string note;
  double ms = 0.0;
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::size_t failures() const;
  /// Orders rows by rank then check id, with rank-independent rows last.
  void sort_canonical();
  std::string to_text() const;
  nlohmann::json to_json() const;
};

struct Options {
  bool deep = false;
  unsigned threads = 1;
};

nlohmann::json default_fixture();
nlohmann::json load_fixture(const std::string& path);

/// All checks for one rank.
Report run_rank_checks(int r, const nlohmann::json& fixture, const Options& opt);
/// Rank-independent checks (the theta coefficient oracle).
Report run_global_checks(const nlohmann::json& fixture, const Options& opt);
/// Ranks 3..8 plus the global checks, ordered by rank then check id.
Report run_all(const nlohmann::json& fixture, const Options& opt);

}  // namespace gosset::verify
