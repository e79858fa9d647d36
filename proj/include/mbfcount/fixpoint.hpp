#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "count.hpp"
#include "errors.hpp"
#include "mbf.hpp"
#include "mbf_set.hpp"
#include "oracle.hpp"
#include "orbit_poset.hpp"
#include "packed.hpp"
#include "parallel.hpp"
#include "permutation.hpp"

namespace mbfcount {

enum class Strategy {
  alg1_enumerate,
  alg1_count,
  alg2_pairs,
  alg3_split,
  quadrant_two_fixed,
  oracle,
  known_constant,
};

inline std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::alg1_enumerate: return "alg1-enumerate";
    case Strategy::alg1_count: return "alg1-count";
    case Strategy::alg2_pairs: return "alg2-pairs";
    case Strategy::alg3_split: return "alg3-split";
    case Strategy::quadrant_two_fixed: return "quadrant-two-fixed";
    case Strategy::oracle: return "oracle";
    case Strategy::known_constant: return "known-constant";
  }
  return "unknown";
}

/// Strategy requested from phi(); Auto lets the dispatcher pick.
enum class StrategyChoice { automatic, alg1, alg1_count, alg2_pairs, alg3, quadrant, oracle };

inline StrategyChoice parse_strategy(std::string_view s) {
  if (s == "auto") return StrategyChoice::automatic;
  if (s == "alg1" || s == "alg1-enumerate") return StrategyChoice::alg1;
  if (s == "alg1-count") return StrategyChoice::alg1_count;
  if (s == "alg2-pairs" || s == "alg2") return StrategyChoice::alg2_pairs;
  if (s == "alg3" || s == "alg3-split") return StrategyChoice::alg3;
  if (s == "quadrant" || s == "quadrant-two-fixed") return StrategyChoice::quadrant;
  if (s == "oracle") return StrategyChoice::oracle;
  throw InputError("unknown strategy '" + std::string(s) + "' (auto|alg1|alg1-count|alg2-pairs|alg3|quadrant|oracle)");
}

/// Work limits. Exceeding one raises ResourceError; the dispatcher then
/// moves on to the next strategy.
struct Budgets {
  std::uint64_t pair_comparisons = 10'000'000'000'000ULL;  // 1e13
  std::uint64_t downsets = 100'000'000;                    // 1e8 materialized or counting states
  std::uint64_t family_elements = 100'000'000;             // largest materialized fix set
};

/// Preset budgets: tier 1 covers n <= 6 in seconds, tier 2 everything up to
/// n = 7, tier 3 (the defaults) the heavy rows at n = 8.
inline Budgets budgets_for_tier(int tier) {
  switch (tier) {
    case 1: return Budgets{1'000'000'000ULL, 1'000'000, 200'000};
    case 2: return Budgets{100'000'000'000ULL, 10'000'000, 2'000'000};
    case 3: return Budgets{};
    default: throw InputError("tier must be 1, 2 or 3, got " + std::to_string(tier));
  }
}

/// All fixed points of the canonical permutation of a cycle type in D_n.
struct FixSet {
  CycleType type;  // type.vars() == elements.vars()
  MbfSet elements;

  int vars() const { return elements.vars(); }
  std::size_t size() const { return elements.size(); }
};

struct PhiResult {
  CycleType type;
  int n = 0;
  Count phi = 0;
  Strategy strategy = Strategy::alg1_count;
  std::chrono::duration<double> elapsed{};
};

namespace detail {

inline std::uint64_t orbit_mask(const Orbit& o, int n) {
  std::uint64_t m = 0;
  for (int s : o) m |= packed::index_bit(static_cast<std::size_t>(s), n);
  return m;
}

/// Fixed points of perm (acting on its own m variables) as packed renderings
/// at level m, one per downset of the orbit poset.
inline std::vector<std::uint64_t> packed_base_level(const VarPerm& perm, const Budgets& budgets) {
  const int m = perm.vars();
  const OrbitPoset poset(lift(perm));
  const auto downsets = enumerate_downsets(poset, static_cast<std::size_t>(std::min<std::uint64_t>(budgets.downsets, budgets.family_elements)));
  std::vector<std::uint64_t> masks;
  for (const Orbit& o : poset.orbits()) masks.push_back(orbit_mask(o, m));
  std::vector<std::uint64_t> out;
  out.reserve(downsets.size());
  const std::uint64_t full = packed::width_mask(m);
  for (const Downset& d : downsets) {
    std::uint64_t zero_region = 0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (d.members.test(i)) zero_region |= masks[i];
    }
    out.push_back(full & ~zero_region);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Fixed points of perm (on m variables) inside D_n, n >= m, n <= 6: base
/// level by downsets, then one doubling per added fixed variable.
inline std::vector<std::uint64_t> packed_fix_elements(const VarPerm& perm, int n, const Budgets& budgets) {
  if (n > packed::kMaxPackedVars || perm.vars() > n) throw InputError("packed fix sets need m <= n <= 6");
  std::vector<std::uint64_t> level = packed_base_level(perm, budgets);
  for (int k = perm.vars(); k < n; ++k) {
    const auto sz = static_cast<std::uint64_t>(level.size());
    if (sz * sz > budgets.pair_comparisons) {
      throw ResourceError("doubling a fix set of " + std::to_string(sz) + " elements exceeds the pair budget");
    }
    level = packed::extend_by_fixed_variable(level, k, static_cast<std::size_t>(budgets.family_elements));
  }
  return level;
}

/// A packed fix set with interval counts:
///   down(x) = |{a in F : a ⪯ x}|,  up(x) = |{d in F : x ⪯ d}| = down(dual x).
///
/// F is exactly the set of unions of orbits that are upward closed, so the
/// counts come from a zeta transform over orbits processed top-down: for
/// each orbit O and each U ⊇ O with U \ O in F, down(U) += down(U \ O).
/// Only sets containing O change in a pass and they read sets without O,
/// so each pass runs in place.
class FixFamily {
 public:
  FixFamily(const VarPerm& base_perm, int n, const Budgets& budgets, const Exec& exec)
      : n_(n), perm_(base_perm.extended_to(n)), elements_(packed_fix_elements(base_perm, n, budgets)),
        index_(elements_) {
    compute_down(exec);
  }

  /// From an already complete fix set of perm at perm.vars() variables.
  FixFamily(const VarPerm& perm, std::vector<std::uint64_t> sorted_elements, const Exec& exec)
      : n_(perm.vars()), perm_(perm), elements_(std::move(sorted_elements)), index_(elements_) {
    compute_down(exec);
  }

  FixFamily(const FixFamily&) = delete;
  FixFamily& operator=(const FixFamily&) = delete;

  int vars() const { return n_; }
  const VarPerm& perm() const { return perm_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<std::uint64_t>& elements() const { return elements_; }

  std::uint64_t down_at(std::size_t i) const { return down_[i]; }
  std::uint64_t down(std::uint64_t x) const { return down_[index_.at(x)]; }
  std::uint64_t up(std::uint64_t x) const { return down_[index_.at(packed::dual(x, n_))]; }

 private:
  void compute_down(const Exec& exec) {
    down_.assign(elements_.size(), 1);
    auto os = orbits(lift(perm_));
    std::stable_sort(os.begin(), os.end(), [](const Orbit& a, const Orbit& b) {
      return std::popcount(static_cast<unsigned>(a.front())) > std::popcount(static_cast<unsigned>(b.front()));
    });
    for (const Orbit& o : os) {
      const std::uint64_t m = orbit_mask(o, n_);
      parallel_for(elements_.size(), exec, [&](std::size_t i) {
        const std::uint64_t u = elements_[i];
        if ((u & m) != m) return;
        const std::uint32_t j = index_.find(u & ~m);
        if (j != packed::FlatIndex::kMissing) down_[i] += down_[j];
      });
    }
  }

  int n_;
  VarPerm perm_;
  std::vector<std::uint64_t> elements_;
  packed::FlatIndex index_;
  std::vector<std::uint64_t> down_;
};

inline Count packed_pair_count(const std::vector<std::uint64_t>& family, const Exec& exec) {
  return parallel_sum(family.size(), exec, "alg2 pairs",
                      [&](std::size_t b) { return packed::count_leq_pairs_in(family, b); });
}

inline Count mbf_pair_count(const std::vector<Mbf>& family, const Exec& exec) {
  return parallel_sum(family.size(), exec, "alg2 pairs", [&](std::size_t b) {
    std::uint64_t c = 0;
    for (const Mbf& a : family) c += static_cast<std::uint64_t>(leq(a, family[b]));
    return c;
  });
}

/// Sum over beta in base of down_F(beta & gamma) * up_F(beta | gamma), gamma = inner(beta).
inline Count packed_alg3(const FixFamily& fam, const std::vector<std::uint64_t>& base, const Exec& exec) {
  const packed::BitPermuter permute(fam.vars(), lift(fam.perm()).image());
  return parallel_sum(base.size(), exec, "alg3 split", [&](std::size_t i) {
    const std::uint64_t beta = base[i];
    const std::uint64_t gamma = permute(beta);
    return static_cast<Count>(fam.down(beta & gamma)) * fam.up(beta | gamma);
  });
}

/// Sum over ordered pairs (beta, gamma) in F^2 of down_F(beta & gamma) * up_F(beta | gamma).
inline Count packed_quadrant(const FixFamily& fam, const Exec& exec) {
  const auto& el = fam.elements();
  return parallel_sum(el.size(), exec, "quadrant", [&](std::size_t i) {
    const std::uint64_t beta = el[i];
    Count c = static_cast<Count>(fam.down_at(i)) * fam.up(beta);
    Count off = 0;
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      const std::uint64_t gamma = el[j];
      off += static_cast<Count>(fam.down(beta & gamma)) * fam.up(beta | gamma);
    }
    return c + 2 * off;
  });
}

inline void check_pairs(std::uint64_t size, const Budgets& budgets, std::string_view what) {
  if (size != 0 && size > budgets.pair_comparisons / size) {
    throw ResourceError(std::string(what) + ": " + std::to_string(size) + "^2 comparisons exceed the pair budget of " +
                        std::to_string(budgets.pair_comparisons));
  }
}

/// Square of a permutation restricted to the variables the original moves.
inline VarPerm squared(const VarPerm& p) { return compose(p, p); }

}  // namespace detail

/// Fix set of a cycle type at its arity via downsets of the orbit poset: the
/// downset is the 0-region of the function, so each one gives a monotone
/// function constant on orbits.
inline FixSet alg1_fixset(const CycleType& t, const Budgets& budgets = {}) {
  const OrbitPoset poset(lift(canonical_perm(t)));
  const auto downsets = enumerate_downsets(poset, static_cast<std::size_t>(budgets.downsets));
  std::vector<Mbf> fns;
  fns.reserve(downsets.size());
  for (const Downset& d : downsets) fns.push_back(poset.to_function(d));
  return FixSet{t, MbfSet(t.vars(), std::move(fns))};
}

/// One more fixed variable: {concat(a, b) : a, b in fs, a ⪯ b}.
inline FixSet alg2_extend(const FixSet& fs, const Budgets& budgets = {}) {
  if (fs.vars() >= kMaxVars) throw InputError("alg2_extend: already at 8 variables");
  detail::check_pairs(fs.size(), budgets, "alg2_extend");
  std::vector<Mbf> out;
  for (const Mbf& a : fs.elements) {
    for (const Mbf& b : fs.elements) {
      if (!leq(a, b)) continue;
      if (out.size() >= budgets.family_elements) {
        throw ResourceError("alg2_extend output exceeds the element budget; use alg2_count_pairs");
      }
      out.push_back(concat(a, b));
    }
  }
  return FixSet{fs.type.with_vars(fs.vars() + 1), MbfSet(fs.vars() + 1, std::move(out))};
}

/// |{(a, b) in fs^2 : (a | b) == b}|, the size of alg2_extend(fs) without building it.
inline Count alg2_count_pairs(const FixSet& fs, const Exec& exec = {}) {
  if (fs.vars() <= packed::kMaxPackedVars) return detail::packed_pair_count(fs.elements.packed(), exec);
  return detail::mbf_pair_count(fs.elements.elements(), exec);
}

/// Fix set of t's canonical permutation in D_n: downsets at the moved
/// variables, then doubling for each fixed variable.
inline FixSet fix_set(const CycleType& t, const Budgets& budgets = {}) {
  const int m = t.total_length();
  FixSet fs = alg1_fixset(t.with_vars(m), budgets);
  while (fs.vars() < t.vars()) fs = alg2_extend(fs, budgets);
  return fs;
}

/// Fixed points in D_{n+2} of inner ⊕ (x_{n+1} x_{n+2}), n = inner.vars():
///   sum over beta in base of |{a in F : a ⪯ beta & gamma}| * |{d in F : beta | gamma ⪯ d}|,
/// gamma = apply(lift(inner), beta). F must be Fix(inner, D_n); base is D_n
/// for an involution and Fix(inner^2, D_n) otherwise.
inline Count alg3_count(const CycleType& inner, const FixSet& F, const MbfSet& base, const Exec& exec = {}) {
  if (F.vars() != inner.vars() || base.vars() != inner.vars()) {
    throw InputError("alg3_count: F, base and inner type must share n (" + std::to_string(F.vars()) + ", " +
                     std::to_string(base.vars()) + ", " + std::to_string(inner.vars()) + ")");
  }
  if (inner.vars() > packed::kMaxPackedVars) throw InputError("alg3_count: inner part limited to 6 variables");
  const detail::FixFamily fam(canonical_perm(inner), F.elements.packed(), exec);
  return detail::packed_alg3(fam, base.packed(), exec);
}

/// Fixed points in D_{n+2} when both added variables are fixed:
///   sum over (beta, gamma) in F^2 of |{a : a ⪯ beta & gamma}| * |{d : beta | gamma ⪯ d}|.
/// With F = D_n this is d_{n+2}.
inline Count quadrant_count_two_fixed(const FixSet& F, const Exec& exec = {}) {
  if (F.vars() > packed::kMaxPackedVars) throw InputError("quadrant_count_two_fixed: F limited to 6 variables");
  const detail::FixFamily fam(canonical_perm(F.type), F.elements.packed(), exec);
  return detail::packed_quadrant(fam, exec);
}

namespace detail {

inline Count run_alg1_count(const CycleType& t, const Budgets& budgets, const Exec& exec) {
  const OrbitPoset poset(lift(canonical_perm(t)));
  auto c = try_count_downsets(poset, static_cast<std::size_t>(budgets.downsets), exec.progress);
  if (!c) {
    throw ResourceError("alg1-count: more than " + std::to_string(budgets.downsets) + " branch states for " +
                        t.notation() + " at n=" + std::to_string(t.vars()));
  }
  return *c;
}

inline Count run_alg1_enumerate(const CycleType& t, const Budgets& budgets) {
  const OrbitPoset poset(lift(canonical_perm(t)));
  return enumerate_downsets(poset, static_cast<std::size_t>(budgets.downsets)).size();
}

inline Count run_alg2_pairs(const CycleType& t, const Budgets& budgets, const Exec& exec) {
  const int n = t.vars();
  const int m = t.total_length();
  if (n < 1 || m > n - 1) throw PreconditionError("alg2-pairs needs a fixed variable (total length <= n-1)");
  const VarPerm base = canonical_perm(t.with_vars(m));
  if (n - 1 <= packed::kMaxPackedVars) {
    const auto fam = packed_fix_elements(base, n - 1, budgets);
    check_pairs(fam.size(), budgets, "alg2-pairs");
    return packed_pair_count(fam, exec);
  }
  // Level n-1 = 7 no longer fits a word.
  std::vector<Mbf> level;
  if (m == n - 1) {
    level = alg1_fixset(t.with_vars(m), budgets).elements.elements();
  } else {
    const auto six = packed_fix_elements(base, packed::kMaxPackedVars, budgets);
    check_pairs(six.size(), budgets, "alg2-pairs doubling to 7 variables");
    for (std::uint64_t a : six) {
      for (std::uint64_t b : six) {
        if ((a | b) != b) continue;
        if (level.size() >= budgets.family_elements) throw ResourceError("alg2-pairs: fix set at 7 variables exceeds the element budget");
        level.push_back(concat(Mbf::from_u64(6, a), Mbf::from_u64(6, b)));
      }
    }
  }
  check_pairs(level.size(), budgets, "alg2-pairs");
  return mbf_pair_count(level, exec);
}

inline Count run_alg3(const CycleType& t, const Budgets& budgets, const Exec& exec) {
  const int n = t.vars();
  if (!t.has_two_cycle()) throw PreconditionError("alg3 needs a 2-cycle in " + t.notation());
  const CycleType inner = t.without_two_cycle();
  if (inner.vars() > packed::kMaxPackedVars) throw PreconditionError("alg3 inner part limited to 6 variables");
  const int m = inner.total_length();
  const VarPerm inner_base = canonical_perm(inner.with_vars(m));
  const FixFamily fam(inner_base, n - 2, budgets, exec);
  // beta must satisfy inner^2(beta) = beta.
  const VarPerm sq = squared(inner_base);
  if (sq == VarPerm::identity(sq.vars())) {
    const auto all = packed_dn(n - 2);
    if (all.size() > budgets.family_elements) {
      throw ResourceError("alg3: D_" + std::to_string(n - 2) + " exceeds the element budget");
    }
    return packed_alg3(fam, all, exec);
  }
  return packed_alg3(fam, packed_fix_elements(sq, n - 2, budgets), exec);
}

inline Count run_quadrant(const CycleType& t, const Budgets& budgets, const Exec& exec) {
  const int n = t.vars();
  const int m = t.total_length();
  if (n < 2 || m > n - 2) throw PreconditionError("quadrant needs two fixed variables (total length <= n-2)");
  if (n - 2 > packed::kMaxPackedVars) throw PreconditionError("quadrant limited to fix sets of at most 6 variables");
  const FixFamily fam(canonical_perm(t.with_vars(m)), n - 2, budgets, exec);
  const auto half = static_cast<std::uint64_t>(fam.size()) * (fam.size() + 1) / 2;
  if (half > budgets.pair_comparisons) {
    throw ResourceError("quadrant: " + std::to_string(fam.size()) + " element fix set needs " + std::to_string(half) +
                        " pair lookups, over the pair budget");
  }
  return packed_quadrant(fam, exec);
}

inline Count run_strategy(Strategy s, const CycleType& t, const Budgets& budgets, const Exec& exec) {
  switch (s) {
    case Strategy::alg1_enumerate: return run_alg1_enumerate(t, budgets);
    case Strategy::alg1_count: return run_alg1_count(t, budgets, exec);
    case Strategy::alg2_pairs: return run_alg2_pairs(t, budgets, exec);
    case Strategy::alg3_split: return run_alg3(t, budgets, exec);
    case Strategy::quadrant_two_fixed: return run_quadrant(t, budgets, exec);
    case Strategy::oracle: return oracle::oracle_phi(canonical_perm(t));
    case Strategy::known_constant: break;
  }
  throw InternalError("strategy has no runner");
}

}  // namespace detail

/// Strategies whose structural preconditions hold for t (budgets aside).
inline std::vector<Strategy> applicable_strategies(const CycleType& t) {
  const int n = t.vars();
  const int m = t.total_length();
  std::vector<Strategy> s{Strategy::alg1_enumerate, Strategy::alg1_count};
  if (n >= 1 && m <= n - 1) s.push_back(Strategy::alg2_pairs);
  if (t.has_two_cycle() && n - 2 <= packed::kMaxPackedVars) s.push_back(Strategy::alg3_split);
  if (n >= 2 && m <= n - 2 && n - 2 <= packed::kMaxPackedVars) s.push_back(Strategy::quadrant_two_fixed);
  if (n <= 5) s.push_back(Strategy::oracle);
  return s;
}

/// Automatic order: all variables moved -> alg1 counting; one fixed
/// variable -> alg2 pair counting; a 2-cycle -> alg3 split; otherwise the
/// quadrant count over the fix set at n-2.
inline std::vector<Strategy> auto_plan(const CycleType& t) {
  const int n = t.vars();
  const int m = t.total_length();
  std::vector<Strategy> plan;
  if (m == n) plan.push_back(Strategy::alg1_count);
  if (n >= 1 && m == n - 1) plan.push_back(Strategy::alg2_pairs);
  if (t.has_two_cycle() && n - 2 <= packed::kMaxPackedVars) plan.push_back(Strategy::alg3_split);
  if (n >= 2 && m <= n - 2 && n - 2 <= packed::kMaxPackedVars) plan.push_back(Strategy::quadrant_two_fixed);
  return plan;
}

/// φ(t) in D_n: the number of monotone functions fixed by any permutation of cycle type t.
inline PhiResult phi(const CycleType& type, int n, StrategyChoice choice = StrategyChoice::automatic,
                     const Budgets& budgets = {}, const Exec& exec = {}) {
  if (n < 0 || n > kMaxVars) throw InputError("phi: n must be in 0..8, got " + std::to_string(n));
  if (type.total_length() > n) {
    throw InputError("phi: cycle type " + type.notation() + " moves more than n=" + std::to_string(n) + " variables");
  }
  const CycleType t = type.with_vars(n);
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&](Count value, Strategy s) {
    return PhiResult{t, n, value, s, std::chrono::steady_clock::now() - start};
  };

  auto forced = [&](Strategy s) {
    const auto ok = applicable_strategies(t);
    if (std::find(ok.begin(), ok.end(), s) == ok.end()) {
      throw PreconditionError(std::string(to_string(s)) + " does not apply to " + t.notation() + " at n=" + std::to_string(n));
    }
    return finish(detail::run_strategy(s, t, budgets, exec), s);
  };

  switch (choice) {
    case StrategyChoice::alg1: return forced(Strategy::alg1_enumerate);
    case StrategyChoice::alg1_count: return forced(Strategy::alg1_count);
    case StrategyChoice::alg2_pairs: return forced(Strategy::alg2_pairs);
    case StrategyChoice::alg3: return forced(Strategy::alg3_split);
    case StrategyChoice::quadrant: return forced(Strategy::quadrant_two_fixed);
    case StrategyChoice::oracle: return forced(Strategy::oracle);
    case StrategyChoice::automatic: break;
  }

  std::string failures;
  for (Strategy s : auto_plan(t)) {
    try {
      return finish(detail::run_strategy(s, t, budgets, exec), s);
    } catch (const ResourceError& e) {
      failures += failures.empty() ? "" : "; ";
      failures += std::string(to_string(s)) + ": " + e.what();
    }
  }
  if (failures.empty()) failures = "no strategy applies";
  throw ResourceError("phi(" + t.notation() + ", n=" + std::to_string(n) + "): no strategy fits the budgets (" + failures + ")");
}

}  // namespace mbfcount
