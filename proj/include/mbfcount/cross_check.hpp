#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "burnside.hpp"
#include "count.hpp"
#include "fixpoint.hpp"
#include "mbf_set.hpp"
#include "oracle.hpp"
#include "orbit_poset.hpp"
#include "permutation.hpp"

namespace mbfcount {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs every oracle-versus-fast comparison available at n <= 4:
/// D_n enumeration, r_n, phi for every cycle type under every applicable
/// strategy and for every concrete permutation, downset counts and width.
inline std::vector<CheckOutcome> oracle_check(int n, const Exec& exec = {}) {
  if (n < 0 || n > 4) throw InputError("oracle-check supports n in 0..4, got " + std::to_string(n));
  std::vector<CheckOutcome> out;
  auto record = [&out](std::string name, Count expected, Count actual) {
    out.push_back({std::move(name), expected == actual, "expected " + to_decimal(expected) + ", got " + to_decimal(actual)});
  };

  const MbfSet slow = oracle::oracle_enum_dn(n);
  const MbfSet fast = enumerate_dn(n);
  out.push_back({"D_" + std::to_string(n) + " enumeration", slow == fast,
                 std::to_string(slow.size()) + " oracle elements vs " + std::to_string(fast.size())});
  record("d_" + std::to_string(n) + " reference", dedekind_reference()[static_cast<std::size_t>(n)], fast.size());

  // Oracle phi for every concrete permutation, grouped by cycle type.
  std::map<std::string, std::vector<Count>> by_type;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  Count burnside_sum = 0;
  do {
    const VarPerm p(img);
    const Count c = oracle::oracle_phi(p);
    by_type[p.cycle_type().text()].push_back(c);
    burnside_sum += c;
  } while (std::next_permutation(img.begin(), img.end()));

  const Count r_oracle = oracle::oracle_r(n);
  record("r_" + std::to_string(n) + " Burnside over all permutations", r_oracle, burnside_sum / factorial(n));
  record("r_" + std::to_string(n) + " reference", inequivalent_reference()[static_cast<std::size_t>(n)], r_oracle);
  record("r_" + std::to_string(n) + " compute_r", r_oracle, compute_r(n, {}, {}, exec).r);

  for (const CycleType& t : partitions_in_table_order(n)) {
    const auto& values = by_type[t.text()];
    const Count expected = values.front();
    for (Count v : values) record("phi " + t.notation() + " conjugacy invariance", expected, v);
    for (Strategy s : applicable_strategies(t)) {
      const Count got = detail::run_strategy(s, t, {}, exec);
      record("phi " + t.notation() + " n=" + std::to_string(n) + " via " + std::string(to_string(s)), expected, got);
    }
    record("phi " + t.notation() + " auto", expected, phi(t, n, StrategyChoice::automatic, {}, exec).phi);

    const OrbitPoset poset(lift(canonical_perm(t)));
    const Count oracle_down = oracle::oracle_downsets(poset);
    record("downsets " + t.notation() + " count_downsets", oracle_down, count_downsets(poset));
    record("downsets " + t.notation() + " enumerate_downsets", oracle_down, enumerate_downsets(poset).size());
    record("downsets " + t.notation() + " match fixed points", expected, oracle_down);
    record("width " + t.notation(), oracle::oracle_width(poset), width(poset));
  }
  return out;
}

}  // namespace mbfcount
