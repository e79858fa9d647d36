// Acceptance criteria runner. Prints one PASS/FAIL line per criterion up to
// the requested tier and exits non-zero if any fails. Tolerance is zero.
//
//   acceptance --tier 1   criteria 1-8  (seconds)
//   acceptance --tier 2   criteria 1-10 (adds d_7 and the n = 7 table)
//   acceptance --tier 3   criteria 1-13 (the n = 8 table, d_8 as a constant)

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mbfcount/mbfcount.hpp"

namespace {

using namespace mbfcount;

// Collects mismatches for one criterion.
class Check {
 public:
  template <class A, class B>
  void equal(const std::string& what, const A& expected, const B& actual) {
    if (!(expected == actual)) failures_.push_back(what + ": expected " + show(expected) + ", got " + show(actual));
  }
  void that(const std::string& what, bool ok) {
    if (!ok) failures_.push_back(what);
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  static std::string show(Count c) { return to_decimal(c); }
  static std::string show(const std::string& s) { return s; }
  template <class T>
  static std::string show(const T& v) {
    std::ostringstream out;
    out << v;
    return out.str();
  }
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  int tier;
  std::string title;
  std::function<void(Check&)> run;
};

Count d_ref(int n) { return dedekind_reference()[static_cast<std::size_t>(n)]; }
Count r_ref(int n) { return inequivalent_reference()[static_cast<std::size_t>(n)]; }

// The n = 8 report is shared by criteria 11-13.
const BurnsideReport& report8(const Budgets& budgets) {
  static const BurnsideReport report = [&] {
    KnownConstants k;
    k.set("d8", parse_count("56130437228687557907788"));
    return compute_r(8, k, budgets);
  }();
  return report;
}

void check_rows(Check& c, const BurnsideReport& report, const std::map<std::string, Count>& expected) {
  std::map<std::string, Count> got;
  for (const auto& row : report.rows) got[row.type.notation()] = row.phi;
  for (const auto& [name, value] : expected) {
    auto it = got.find(name);
    if (it == got.end()) {
      c.that(name + " missing from the report", false);
    } else {
      c.equal("phi" + name, value, it->second);
    }
  }
}

std::vector<Criterion> criteria(const Budgets& budgets) {
  std::vector<Criterion> out;

  out.push_back({1, 1, "d_0..d_6 via enumerate_dn and via quadrant counting", [](Check& c) {
                   for (int n = 0; n <= 6; ++n) {
                     c.equal("enumerate_dn(" + std::to_string(n) + ")", d_ref(n), static_cast<Count>(enumerate_dn(n).size()));
                     // Quadrant counting needs two fixed variables; d_0 and d_1 use downset counting.
                     const PhiResult r = n >= 2 ? phi(CycleType::identity(n), n, StrategyChoice::quadrant)
                                                : phi(CycleType::identity(n), n, StrategyChoice::alg1_count);
                     c.equal("counted d_" + std::to_string(n) + " via " + std::string(to_string(r.strategy)), d_ref(n), r.phi);
                   }
                 }});

  out.push_back({2, 1, "r_0..r_6 via compute_r, r_0..r_4 via oracle_r", [](Check& c) {
                   for (int n = 0; n <= 6; ++n) c.equal("compute_r(" + std::to_string(n) + ")", r_ref(n), compute_r(n).r);
                   for (int n = 0; n <= 4; ++n) c.equal("oracle_r(" + std::to_string(n) + ")", r_ref(n), oracle::oracle_r(n));
                 }});

  out.push_back({3, 1, "phi((123), 3) = 5 with fixed set {0, 1, 23, 127, 255}", [](Check& c) {
                   const CycleType t = CycleType::parse("3", 3);
                   c.equal("phi", Count{5}, phi(t, 3).phi);
                   std::string got;
                   for (const Mbf& f : alg1_fixset(t).elements) got += (got.empty() ? "" : ",") + f.to_decimal();
                   c.equal("fixed set", std::string("0,1,23,127,255"), got);
                 }});

  out.push_back({4, 1, "phi((12)(34), 4) = 28 via alg1 downsets, alg3 split and the oracle", [](Check& c) {
                   const CycleType t = CycleType::parse("2+2", 4);
                   c.equal("alg1 downsets", Count{28}, phi(t, 4, StrategyChoice::alg1).phi);
                   c.equal("alg3 split", Count{28}, phi(t, 4, StrategyChoice::alg3).phi);
                   c.equal("alg3_count with inner 2-cycle", Count{28},
                           alg3_count(CycleType::parse("2", 2), alg1_fixset(CycleType::parse("2", 2)), enumerate_dn(2)));
                   c.equal("oracle filter", Count{28}, oracle::oracle_phi(canonical_perm(t)));
                 }});

  out.push_back({5, 1, "lifted cycle decompositions of (x1 x2 x3) and (x1 x2)(x3 x4)", [](Check& c) {
                   std::string three = lift(canonical_perm(CycleType::parse("3", 3))).to_cycle_string();
                   std::erase(three, ' ');
                   c.equal("(x1 x2 x3)", std::string("(0)(124)(365)(7)"), three);
                   c.equal("(x1 x2)(x3 x4)", std::string("(0)(1 2)(3)(4 8)(5 10)(6 9)(7 11)(12)(13 14)(15)"),
                           lift(canonical_perm(CycleType::parse("2+2", 4))).to_cycle_string());
                 }});

  out.push_back({6, 1, "mu sums to 7! and 8!; mu columns of both tables", [](Check& c) {
                   for (const ReferenceTable& ref : {reference_table7(), reference_table8()}) {
                     Count sum = 0;
                     for (const CycleType& t : partitions(ref.n)) sum += mu(t);
                     c.equal("sum of mu at n=" + std::to_string(ref.n), factorial(ref.n), sum);
                     const auto types = partitions_in_table_order(ref.n);
                     c.equal("row count at n=" + std::to_string(ref.n), ref.rows.size(), types.size());
                     for (std::size_t i = 0; i < std::min(types.size(), ref.rows.size()); ++i) {
                       c.equal("row order", ref.rows[i].notation, types[i].notation());
                       c.equal("mu" + ref.rows[i].notation, ref.rows[i].mu, mu(types[i]));
                     }
                   }
                   c.equal("mu (123) at 7", Count{70}, mu(CycleType::parse("3", 7)));
                   c.equal("mu (12)(34)(56)(78) at 8", Count{105}, mu(CycleType::parse("2+2+2+2", 8)));
                 }});

  out.push_back({7, 1, "width 38 for (12)(34)(56)(78) on B^8 and 2^38 = 274877906944", [](Check& c) {
                   const std::size_t w = width(OrbitPoset(lift(canonical_perm(CycleType::parse("2+2+2+2", 8)))));
                   c.equal("width", std::size_t{38}, w);
                   c.equal("2^width", std::string("274877906944"), to_decimal(Count{1} << w));
                 }});

  out.push_back({8, 1, "oracle agreement for every cycle type and strategy at n <= 4", [](Check& c) {
                   for (int n = 0; n <= 4; ++n) {
                     for (const CheckOutcome& r : oracle_check(n)) c.that("n=" + std::to_string(n) + " " + r.name + " (" + r.detail + ")", r.passed);
                   }
                 }});

  out.push_back({9, 2, "d_7 = 2414682040998 via quadrant counting over D_5", [](Check& c) {
                   const PhiResult r = phi(CycleType::identity(7), 7, StrategyChoice::quadrant, budgets_for_tier(2));
                   c.equal("d_7", parse_count("2414682040998"), r.phi);
                 }});

  out.push_back({10, 2, "n = 7 table: 15 (mu, phi) rows, r_7 = 490013148, divisible by 5040", [](Check& c) {
                   const BurnsideReport rep = compute_r(7, {}, budgets_for_tier(2));
                   for (const Discrepancy& d : verify_report(rep, reference_table7())) c.that(d.describe(), false);
                   c.equal("rows", std::size_t{15}, rep.rows.size());
                   c.equal("total mod 7!", Count{0}, rep.total % factorial(7));
                   c.equal("r_7", parse_count("490013148"), rep.r);
                 }});

  out.push_back({11, 3, "n = 8 table, cheap rows", [budgets](Check& c) {
                   check_rows(c, report8(budgets),
                              {{"(12345678)", 2364},
                               {"(1234567)", 3858},
                               {"(123456)", 144320},
                               {"(12345)", 531708},
                               {"(1234)", 424234996},
                               {"(12)(34567)", 21216},
                               {"(123)(4567)", 25168},
                               {"(123)(45678)", 870},
                               {"(12)(345678)", 70096},
                               {"(1234)(5678)", 3211276},
                               {"(12)(345)(678)", 3607596},
                               {"(12)(34)(5678)", 37834164},
                               {"(12)(34)(567)", 16380370},
                               {"(12)(3456)", 93994196},
                               {"(12)(345)", 401622018},
                               {"(123)(456)", 535426780}});
                 }});

  out.push_back({12, 3, "n = 8 table, heavy rows", [budgets](Check& c) {
                   check_rows(c, report8(budgets),
                              {{"(12)", parse_count("101627867809333596")},
                               {"(12)(34)", parse_count("182755441509724")},
                               {"(12)(34)(56)", parse_count("7377670895900")},
                               {"(12)(34)(56)(78)", parse_count("2038188253420")},
                               {"(123)", parse_count("262808891710")}});
                 }});

  out.push_back({13, 3, "r_8 = 1392195548889993358 with d_8 supplied", [budgets](Check& c) {
                   const BurnsideReport& rep = report8(budgets);
                   for (const Discrepancy& d : verify_report(rep, reference_table8())) c.that(d.describe(), false);
                   c.equal("total mod 8!", Count{0}, rep.total % factorial(8));
                   c.equal("r_8", parse_count("1392195548889993358"), rep.r);
                 }});

  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int tier = 1;
  app.add_option("--tier", tier, "Highest tier to run (1, 2 or 3)")->check(CLI::Range(1, 3));
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  int ran = 0;
  for (const Criterion& cr : criteria(budgets_for_tier(3))) {
    if (cr.tier > tier) continue;
    ++ran;
    Check check;
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.that(std::string("exception: ") + e.what(), false);
    }
    const bool ok = check.failures().empty();
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << cr.id << " (tier " << cr.tier << "): " << cr.title << '\n';
    for (const auto& f : check.failures()) std::cout << "        " << f << '\n';
    std::cout.flush();
    if (!ok) ++failed;
  }
  std::cout << "summary: " << ran - failed << '/' << ran << " criteria passed up to tier " << tier << '\n';
  return failed == 0 ? 0 : 1;
}
