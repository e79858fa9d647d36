#pragma once

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "count.hpp"
#include "errors.hpp"
#include "fixpoint.hpp"
#include "mbf_set.hpp"
#include "permutation.hpp"

namespace mbfcount {

/// Reference Dedekind numbers d_0..d_8.
inline const std::vector<Count>& dedekind_reference() {
  static const std::vector<Count> values{
      2, 3, 6, 20, 168, 7581, 7828354, 2414682040998ULL, parse_count("56130437228687557907788")};
  return values;
}

/// Reference counts of inequivalent monotone functions r_0..r_8.
inline const std::vector<Count>& inequivalent_reference() {
  static const std::vector<Count> values{2, 3, 5, 10, 30, 210, 16353, 490013148, parse_count("1392195548889993358")};
  return values;
}

/// Named exact constants ("d0".."d8"), typically loaded from a JSON file of
/// decimal strings: {"d8": "56130437228687557907788"}.
class KnownConstants {
 public:
  KnownConstants() = default;

  static KnownConstants from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("constants must be a JSON object of decimal strings");
    KnownConstants k;
    for (const auto& [label, value] : j.items()) {
      if (!value.is_string()) throw ConfigError("constant '" + label + "' must be a decimal string");
      try {
        k.set(label, parse_count(value.get<std::string>()));
      } catch (const InputError& e) {
        throw ConfigError("constant '" + label + "': " + e.what());
      }
    }
    k.validate();
    return k;
  }

  static KnownConstants load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open constants file '" + path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("constants file '" + path + "' is not valid JSON: " + e.what());
    }
    return from_json(j);
  }

  void set(const std::string& label, Count value) { values_[label] = value; }

  std::optional<Count> get(const std::string& label) const {
    auto it = values_.find(label);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<Count> dedekind(int n) const { return get("d" + std::to_string(n)); }

  /// Re-derives d_0..d_5 by enumeration and rejects contradicting entries.
  void validate() const {
    for (int n = 0; n <= 5; ++n) {
      if (auto v = dedekind(n)) {
        const Count derived = enumerate_dn(n).size();
        if (*v != derived) {
          throw ConfigError("constant d" + std::to_string(n) + "=" + to_decimal(*v) + " contradicts the enumerated value " +
                            to_decimal(derived));
        }
      }
    }
  }

  const std::map<std::string, Count>& values() const { return values_; }

 private:
  std::map<std::string, Count> values_;
};

struct BurnsideRow {
  CycleType type;
  Count mu = 0;
  Count phi = 0;
  Strategy strategy = Strategy::alg1_count;
  std::chrono::duration<double> elapsed{};
};

/// r_n = (1/n!) * sum_i mu_i * phi(pi_i) with one row per cycle type.
struct BurnsideReport {
  int n = 0;
  std::vector<BurnsideRow> rows;
  Count total = 0;
  Count r = 0;
};

/// d_n for the identity row: counted for n <= 7, taken from constants at n = 8.
inline PhiResult identity_row(int n, const KnownConstants& constants, const Budgets& budgets, const Exec& exec) {
  if (n <= 7) return phi(CycleType::identity(n), n, StrategyChoice::automatic, budgets, exec);
  auto d = constants.dedekind(n);
  if (!d) throw ConfigError("d" + std::to_string(n) + " is required as a known constant (e.g. --constants with {\"d8\": \"...\"})");
  return PhiResult{CycleType::identity(n), n, *d, Strategy::known_constant, {}};
}

inline BurnsideReport compute_r(int n, const KnownConstants& constants = {}, const Budgets& budgets = {},
                                const Exec& exec = {}) {
  if (n < 0 || n > kMaxVars) throw InputError("compute_r: n must be in 0..8, got " + std::to_string(n));
  BurnsideReport report;
  report.n = n;
  for (const CycleType& t : partitions_in_table_order(n)) {
    const PhiResult res = t.is_identity() ? identity_row(n, constants, budgets, exec)
                                          : phi(t, n, StrategyChoice::automatic, budgets, exec);
    report.rows.push_back(BurnsideRow{t, mu(t), res.phi, res.strategy, res.elapsed});
    report.total = checked_add(report.total, checked_mul(report.rows.back().mu, res.phi));
  }
  const Count order = factorial(n);
  if (report.total % order != 0) {
    throw IntegrityError("weighted fixed-point sum " + to_decimal(report.total) + " is not divisible by " +
                         std::to_string(n) + "! = " + to_decimal(order));
  }
  report.r = report.total / order;
  return report;
}

/// Expected (mu, phi) per row plus the final r, in table order.
struct ReferenceTable {
  struct Row {
    std::string notation;
    Count mu;
    Count phi;
  };
  int n = 0;
  std::vector<Row> rows;
  Count r = 0;
};

/// Detailed results for n = 7.
inline ReferenceTable reference_table7() {
  return ReferenceTable{7,
                        {{"(1)", 1, 2414682040998ULL},
                         {"(12)", 21, 2208001624ULL},
                         {"(123)", 70, 2068224},
                         {"(1234)", 210, 60312},
                         {"(12345)", 504, 1548},
                         {"(123456)", 840, 766},
                         {"(1234567)", 720, 101},
                         {"(12)(34)", 105, 67922470},
                         {"(12)(345)", 420, 59542},
                         {"(12)(3456)", 630, 26878},
                         {"(12)(34567)", 504, 264},
                         {"(123)(456)", 280, 69264},
                         {"(123)(4567)", 420, 294},
                         {"(12)(34)(56)", 105, 12015832},
                         {"(12)(34)(567)", 210, 10192}},
                        490013148};
}

/// Detailed results for n = 8.
inline ReferenceTable reference_table8() {
  return ReferenceTable{8,
                        {{"(1)", 1, parse_count("56130437228687557907788")},
                         {"(12)", 28, 101627867809333596ULL},
                         {"(123)", 112, 262808891710ULL},
                         {"(1234)", 420, 424234996},
                         {"(12345)", 1344, 531708},
                         {"(123456)", 3360, 144320},
                         {"(1234567)", 5760, 3858},
                         {"(12345678)", 5040, 2364},
                         {"(12)(34)", 210, 182755441509724ULL},
                         {"(12)(345)", 1120, 401622018},
                         {"(12)(3456)", 2520, 93994196},
                         {"(12)(34567)", 4032, 21216},
                         {"(12)(345678)", 3360, 70096},
                         {"(123)(456)", 1120, 535426780},
                         {"(123)(4567)", 3360, 25168},
                         {"(123)(45678)", 2688, 870},
                         {"(1234)(5678)", 1260, 3211276},
                         {"(12)(34)(56)", 420, 7377670895900ULL},
                         {"(12)(34)(567)", 1680, 16380370},
                         {"(12)(34)(5678)", 1260, 37834164},
                         {"(12)(345)(678)", 1120, 3607596},
                         {"(12)(34)(56)(78)", 105, 2038188253420ULL}},
                        parse_count("1392195548889993358")};
}

inline ReferenceTable to_reference(const BurnsideReport& report) {
  ReferenceTable t{report.n, {}, report.r};
  for (const auto& row : report.rows) t.rows.push_back({row.type.notation(), row.mu, row.phi});
  return t;
}

struct Discrepancy {
  std::string row;  // table notation, or "r" for the final value
  std::string field;
  Count expected = 0;
  Count actual = 0;

  std::string describe() const {
    return row + " " + field + ": expected " + to_decimal(expected) + ", got " + to_decimal(actual);
  }
};

/// Empty iff every (mu, phi) row and the final r agree with the reference.
inline std::vector<Discrepancy> verify_report(const BurnsideReport& report, const ReferenceTable& reference) {
  std::vector<Discrepancy> out;
  std::map<std::string, const BurnsideRow*> computed;
  for (const auto& row : report.rows) computed[row.type.notation()] = &row;
  for (const auto& ref : reference.rows) {
    auto it = computed.find(ref.notation);
    if (it == computed.end()) {
      out.push_back({ref.notation, "missing", ref.phi, 0});
      continue;
    }
    if (it->second->mu != ref.mu) out.push_back({ref.notation, "mu", ref.mu, it->second->mu});
    if (it->second->phi != ref.phi) out.push_back({ref.notation, "phi", ref.phi, it->second->phi});
  }
  if (report.rows.size() != reference.rows.size()) {
    out.push_back({"rows", "count", reference.rows.size(), report.rows.size()});
  }
  if (report.r != reference.r) out.push_back({"r", "value", reference.r, report.r});
  return out;
}

// Report rendering. Integers are decimal strings in JSON so that consumers
// limited to 53-bit numbers read them exactly.

inline nlohmann::json to_json(const PhiResult& res) {
  return {{"type", res.type.text()},
          {"notation", res.type.notation()},
          {"n", res.n},
          {"phi", to_decimal(res.phi)},
          {"strategy", std::string(to_string(res.strategy))},
          {"elapsed_ms", std::chrono::duration<double, std::milli>(res.elapsed).count()}};
}

inline nlohmann::json to_json(const BurnsideReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    rows.push_back({{"i", i + 1},
                    {"type", row.type.text()},
                    {"pi", row.type.notation()},
                    {"mu", to_decimal(row.mu)},
                    {"phi", to_decimal(row.phi)},
                    {"strategy", std::string(to_string(row.strategy))},
                    {"elapsed_ms", std::chrono::duration<double, std::milli>(row.elapsed).count()}});
  }
  return {{"n", report.n}, {"rows", rows}, {"total", to_decimal(report.total)}, {"r", to_decimal(report.r)}};
}

inline std::string to_markdown(const BurnsideReport& report) {
  std::ostringstream out;
  out << "| i | π_i | μ_i | φ(π_i) |\n|---|---|---|---|\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    out << "| " << i + 1 << " | " << row.type.notation() << " | " << to_decimal(row.mu) << " | " << to_decimal(row.phi)
        << " |\n";
  }
  out << "\nr_" << report.n << " = (1/" << report.n << "!) Σ μ_i φ(π_i) = " << to_decimal(report.r) << "\n";
  return out.str();
}

inline std::string to_csv(const BurnsideReport& report) {
  std::ostringstream out;
  out << "i,pi,type,mu,phi,strategy,elapsed_ms\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    out << i + 1 << ',' << row.type.notation() << ',' << row.type.text() << ',' << to_decimal(row.mu) << ','
        << to_decimal(row.phi) << ',' << to_string(row.strategy) << ','
        << std::chrono::duration<double, std::milli>(row.elapsed).count() << '\n';
  }
  out << "r,,,,"
      << to_decimal(report.r) << ",,\n";
  return out.str();
}

}  // namespace mbfcount
