// Command-line front end: Dedekind numbers, fixed-point counts, Burnside
// reports, orbit posets and oracle cross-checks.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "mbfcount/mbfcount.hpp"

namespace {

using namespace mbfcount;

enum Exit : int { kOk = 0, kVerification = 1, kUsage = 2, kConfig = 3, kResource = 4 };

struct Settings {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string strategy = "auto";
  std::string constants_path;
  std::string format = "text";
  int tier = 2;
  std::optional<std::uint64_t> budget_pairs;
  std::optional<std::uint64_t> budget_downsets;
  bool quiet = false;
};

Budgets budgets_for(const Settings& s) {
  Budgets b = budgets_for_tier(s.tier);
  if (s.budget_pairs) b.pair_comparisons = *s.budget_pairs;
  if (s.budget_downsets) b.downsets = *s.budget_downsets;
  return b;
}

Exec exec_for(const Settings& s) {
  Exec e;
  e.threads = s.threads;
  if (!s.quiet) {
    e.progress = [](std::string_view label, double fraction) {
      static std::mutex m;
      std::lock_guard lock(m);
      std::fprintf(stderr, "[%.*s] %3.0f%%\n", static_cast<int>(label.size()), label.data(), fraction * 100.0);
    };
  }
  return e;
}

KnownConstants constants_for(const Settings& s) {
  return s.constants_path.empty() ? KnownConstants{} : KnownConstants::load(s.constants_path);
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_dedekind(const Settings& s, int n) {
  if (n < 0 || n > kMaxVars) throw InputError("n must be in 0..8, got " + std::to_string(n));
  const PhiResult res = identity_row(n, constants_for(s), budgets_for(s), exec_for(s));
  if (s.format == "json") {
    nlohmann::json j = to_json(res);
    j["d"] = to_decimal(res.phi);
    print_json(j);
  } else if (s.format == "csv") {
    std::cout << "n,d,strategy\n" << n << ',' << to_decimal(res.phi) << ',' << to_string(res.strategy) << '\n';
  } else {
    std::cout << to_decimal(res.phi) << '\n';
  }
  return kOk;
}

int cmd_phi(const Settings& s, int n, const std::string& type_text) {
  const CycleType t = CycleType::parse(type_text, n);
  const PhiResult res = phi(t, n, parse_strategy(s.strategy), budgets_for(s), exec_for(s));
  if (s.format == "json") {
    print_json(to_json(res));
  } else if (s.format == "csv") {
    std::cout << "n,pi,type,phi,strategy\n"
              << n << ',' << res.type.notation() << ',' << res.type.text() << ',' << to_decimal(res.phi) << ','
              << to_string(res.strategy) << '\n';
  } else {
    std::cout << to_decimal(res.phi) << '\n';
    if (!s.quiet) std::cerr << "strategy: " << to_string(res.strategy) << '\n';
  }
  return kOk;
}

int cmd_r(const Settings& s, int n) {
  const BurnsideReport report = compute_r(n, constants_for(s), budgets_for(s), exec_for(s));
  if (s.format == "json") {
    print_json(to_json(report));
  } else if (s.format == "csv") {
    std::cout << to_csv(report);
  } else if (s.format == "markdown") {
    std::cout << to_markdown(report);
  } else {
    std::cout << to_decimal(report.r) << '\n';
  }
  // Cross-check against the stored tables where they exist.
  std::vector<Discrepancy> issues;
  if (n == 7) issues = verify_report(report, reference_table7());
  if (n == 8) issues = verify_report(report, reference_table8());
  if (report.r != inequivalent_reference()[static_cast<std::size_t>(n)]) {
    issues.push_back({"r", "value", inequivalent_reference()[static_cast<std::size_t>(n)], report.r});
  }
  for (const auto& d : issues) std::cerr << "mismatch: " << d.describe() << '\n';
  return issues.empty() ? kOk : kVerification;
}

int cmd_poset(const Settings& s, int n, const std::string& type_text) {
  const CycleType t = CycleType::parse(type_text, n);
  const OrbitPoset p(lift(canonical_perm(t)));
  if (s.format != "json") {
    std::cout << p.to_dot();
    return kOk;
  }
  nlohmann::json orbits = nlohmann::json::array();
  for (const Orbit& o : p.orbits()) orbits.push_back(o);
  nlohmann::json covers = nlohmann::json::array();
  for (auto [lo, hi] : p.cover_edges()) covers.push_back({p.orbit(lo).front(), p.orbit(hi).front()});
  nlohmann::json j{{"n", n},
                   {"type", t.text()},
                   {"pi", t.notation()},
                   {"lift", lift(canonical_perm(t)).to_cycle_string()},
                   {"orbits", orbits},
                   {"covers", covers},
                   {"width", p.size() == 0 ? 0 : width(p)}};
  if (auto c = try_count_downsets(p, budgets_for(s).downsets)) j["downsets"] = to_decimal(*c);
  print_json(j);
  return kOk;
}

int cmd_oracle_check(const Settings& s, int n) {
  const auto results = oracle_check(n, exec_for(s));
  std::size_t passed = 0;
  const CheckOutcome* first_failure = nullptr;
  for (const auto& r : results) {
    if (r.passed) {
      ++passed;
    } else if (!first_failure) {
      first_failure = &r;
    }
  }
  if (s.format == "json") {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results) checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    print_json({{"n", n}, {"passed", passed}, {"total", results.size()}, {"checks", checks}});
  } else {
    std::cout << "oracle-check n=" << n << ": " << passed << '/' << results.size() << " checks passed\n";
  }
  if (first_failure) {
    std::cerr << "first failure: " << first_failure->name << " (" << first_failure->detail << ")\n";
    return kVerification;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of monotone Boolean functions and their permutation classes"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--threads", s.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--strategy", s.strategy, "auto|alg1|alg1-count|alg2-pairs|alg3|quadrant|oracle")
      ->check(CLI::IsMember({"auto", "alg1", "alg1-enumerate", "alg1-count", "alg2", "alg2-pairs", "alg3", "alg3-split",
                             "quadrant", "quadrant-two-fixed", "oracle"}));
  app.add_option("--constants", s.constants_path, "JSON file of known constants, e.g. {\"d8\": \"...\"}");
  app.add_option("--format", s.format, "text|json|csv|markdown")
      ->check(CLI::IsMember({"text", "json", "csv", "markdown"}));
  app.add_option("--tier", s.tier, "Budget tier 1|2|3")->check(CLI::Range(1, 3));
  app.add_option("--budget-pairs", s.budget_pairs, "Cap on pair comparisons")->check(CLI::PositiveNumber);
  app.add_option("--budget-downsets", s.budget_downsets, "Cap on materialized downsets / counting states")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet,-q", s.quiet, "Suppress progress on standard error");

  int n = 0;
  std::string type_text;

  auto* dedekind = app.add_subcommand("dedekind", "Print d_n (n = 8 needs --constants)");
  dedekind->add_option("n", n, "Number of variables")->required();

  auto* phi_cmd = app.add_subcommand("phi", "Fixed points of a cycle type, e.g. `phi 8 2+5`");
  phi_cmd->add_option("n", n, "Number of variables")->required();
  phi_cmd->add_option("type", type_text, "Cycle lengths joined by '+', or 'id'")->required();

  auto* r_cmd = app.add_subcommand("r", "Burnside table and r_n");
  r_cmd->add_option("n", n, "Number of variables")->required();

  auto* poset = app.add_subcommand("poset", "Orbit poset as DOT (or JSON with --format json)");
  poset->add_option("n", n, "Number of variables")->required();
  poset->add_option("type", type_text, "Cycle lengths joined by '+'")->required();

  auto* check = app.add_subcommand("oracle-check", "Compare every fast path with the oracles (n <= 4)");
  check->add_option("n", n, "Number of variables")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dedekind) return cmd_dedekind(s, n);
    if (*phi_cmd) return cmd_phi(s, n, type_text);
    if (*r_cmd) return cmd_r(s, n);
    if (*poset) return cmd_poset(s, n, type_text);
    if (*check) return cmd_oracle_check(s, n);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const ResourceError& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kResource;
  } catch (const IntegrityError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerification;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerification;
  }
  return kUsage;
}
