#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gosset/export.hpp"
#include "gosset/parallel.hpp"
#include "gosset/polytope.hpp"
#include "gosset/transforms.hpp"
#include "gosset/verify.hpp"
#include "gosset/weyl.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

int run_count(int r, const std::string& set_name, unsigned threads) {
  const gosset::Surface s(r);
  std::uint64_t count = 0;
  if (set_name == "lines") {
    count = gosset::lines(s).size();
  } else if (set_name == "roots") {
    count = gosset::roots(s).size();
  } else if (set_name == "rulings") {
    count = gosset::rulings(s).size();
  } else if (set_name == "exceptional-systems") {
    count = gosset::exceptional_systems(s).size();
  } else if (set_name == "crosspolytopes") {
    count = gosset::crosspolytopes(gosset::build_polytope(s)).size();
  } else if (set_name.rfind("a-divisors:", 0) == 0) {
    const int a = std::stoi(set_name.substr(std::string("a-divisors:").size()));
    count = gosset::a_divisors(s, a).size();
  } else if (set_name.rfind("simplexes:", 0) == 0) {
    const int k = std::stoi(set_name.substr(std::string("simplexes:").size()));
    count = gosset::count_simplexes(gosset::build_polytope(s), k, threads);
  } else {
    throw std::invalid_argument("unknown set name: " + set_name);
  }
  std::cout << count << "\n";
  return kExitOk;
}

int run_verify(const std::string& scope, bool deep, const std::string& fixture_path,
               unsigned threads, bool as_json) {
  nlohmann::json fixture = fixture_path.empty() ? gosset::verify::default_fixture()
                                                : gosset::verify::load_fixture(fixture_path);
  gosset::verify::Options options;
  options.deep = deep;
  options.threads = threads;

  gosset::verify::Report report;
  if (scope == "all") {
    report = gosset::verify::run_all(fixture, options);
  } else {
    const int r = std::stoi(scope);
    report = gosset::verify::run_rank_checks(r, fixture, options);
    auto global = gosset::verify::run_global_checks(fixture, options);
    report.checks.insert(report.checks.end(), global.checks.begin(), global.checks.end());
    report.sort_canonical();
  }

  if (as_json)
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.to_text();
  return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

int run_export(int r, const std::string& out_path, const std::string& format, unsigned threads) {
  const gosset::Surface s(r);
  const auto polytope = gosset::build_polytope(s);
  std::string content;
  if (format == "json") {
    content = gosset::export_json(polytope, threads);
  } else if (format == "csv") {
    content = gosset::export_csv(polytope, threads);
  } else {
    throw std::invalid_argument("format must be json or csv");
  }
  try {
    gosset::write_text_file(out_path, content);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(e.what());
  }
  std::cerr << "wrote " << content.size() << " bytes to " << out_path << "\n";
  return kExitOk;
}

int run_orbit(int r, const std::string& seed_literal,
              const std::vector<std::string>& generator_literals) {
  const gosset::Surface s(r);
  const gosset::DivisorClass seed = gosset::parse_class_literal(seed_literal);
  if (seed.rank() != r) throw std::invalid_argument("seed literal rank does not match --r");

  gosset::ClassSet result;
  if (generator_literals.empty()) {
    result = gosset::orbit(s, seed);
  } else {
    std::vector<gosset::DivisorClass> generators;
    for (const auto& lit : generator_literals) {
      auto g = gosset::parse_class_literal(lit);
      if (g.rank() != r) throw std::invalid_argument("generator rank does not match --r");
      generators.push_back(g);
    }
    result = gosset::orbit(s, seed, generators);
  }
  std::cout << result.size() << "\n";
  for (const auto& d : result.items) std::cout << d.to_literal() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact del Pezzo / Gosset face-lattice toolkit"};
  app.require_subcommand(1);

  unsigned threads = gosset::default_threads();
  app.add_option("--threads", threads, "worker threads for the clique layers")
      ->capture_default_str();

  // count
  auto* count_cmd = app.add_subcommand("count", "count a class set or face layer");
  int count_r = 0;
  std::string set_name;
  count_cmd->add_option("--r", count_r, "surface rank (3..8)")->required();
  count_cmd
      ->add_option("set", set_name,
                   "lines | roots | rulings | exceptional-systems | a-divisors:A | "
                   "simplexes:K | crosspolytopes")
      ->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  std::string verify_scope = "all";
  bool deep = false;
  bool fast = false;
  bool all_ranks = false;
  bool as_json = false;
  std::string fixture_path;
  verify_cmd->add_option("--r", verify_scope, "surface rank (3..8) or 'all'");
  verify_cmd->add_flag("--all", all_ranks, "verify every rank (same as --r all)");
  verify_cmd->add_flag("--deep", deep, "run the full suite including the rank-8 deep layers");
  verify_cmd->add_flag("--fast", fast, "skip the rank-8 layers above k=3 (default)");
  verify_cmd->add_option("--fixture", fixture_path, "override the expected-count fixture (JSON)");
  verify_cmd->add_flag("--json", as_json, "emit the report as JSON");

  // export
  auto* export_cmd = app.add_subcommand("export", "write the face lattice to a file");
  int export_r = 0;
  std::string out_path;
  std::string format = "json";
  export_cmd->add_option("--r", export_r, "surface rank (3..8)")->required();
  export_cmd->add_option("--out", out_path, "output path")->required();
  export_cmd->add_option("--format", format, "json | csv")->capture_default_str();

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "Weyl orbit of a class literal");
  int orbit_r = 0;
  std::string seed_literal;
  std::vector<std::string> generator_literals;
  orbit_cmd->add_option("--r", orbit_r, "surface rank (3..8)")->required();
  orbit_cmd->add_option("seed", seed_literal, "class literal d0,c1,...,cr")->required();
  orbit_cmd->add_option("generators", generator_literals,
                        "optional root literals (defaults to the simple roots)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (count_cmd->parsed()) return run_count(count_r, set_name, threads);
    if (verify_cmd->parsed()) {
      if (deep && fast) throw std::invalid_argument("--deep and --fast are exclusive");
      if (all_ranks) verify_scope = "all";
      if (verify_scope != "all") {
        const int r = std::stoi(verify_scope);
        if (r < gosset::kMinRank || r > gosset::kMaxRank)
          throw std::invalid_argument("rank out of range [3,8]");
      }
      return run_verify(verify_scope, deep, fixture_path, threads, as_json);
    }
    if (export_cmd->parsed()) return run_export(export_r, out_path, format, threads);
    if (orbit_cmd->parsed()) return run_orbit(orbit_r, seed_literal, generator_literals);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
