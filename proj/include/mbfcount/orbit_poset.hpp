#pragma once

#include <algorithm>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "count.hpp"
#include "errors.hpp"
#include "mbf.hpp"
#include "parallel.hpp"
#include "permutation.hpp"

namespace mbfcount {

inline constexpr std::size_t kMaxOrbits = 256;

/// Membership over the orbit list of one poset.
using OrbitMask = std::bitset<kMaxOrbits>;

/// Downward-closed set of orbits.
struct Downset {
  OrbitMask members;
  friend bool operator==(const Downset&, const Downset&) = default;
};

/// Orbits of B^n under a lifted variable permutation, ordered by
/// O1 <= O2 iff some s in O1 is a subset of some t in O2.
class OrbitPoset {
 public:
  OrbitPoset() = default;

  explicit OrbitPoset(const BitPerm& bp) : n_(bp.vars()), orbits_(mbfcount::orbits(bp)) {
    const std::size_t k = orbits_.size();
    orbit_of_.assign(bp.size(), 0);
    for (std::size_t o = 0; o < k; ++o) {
      for (int s : orbits_[o]) orbit_of_[static_cast<std::size_t>(s)] = static_cast<int>(o);
    }

    // Orbits are translates under the cyclic group, so testing the smallest
    // member of O1 against every member of O2 decides existential inclusion.
    below_.assign(k, {});
    above_.assign(k, {});
    for (std::size_t i = 0; i < k; ++i) {
      const int rep = orbits_[i].front();
      for (std::size_t j = 0; j < k; ++j) {
        const bool le = std::any_of(orbits_[j].begin(), orbits_[j].end(), [rep](int t) { return (rep & t) == rep; });
        if (le) {
          below_[j].set(i);
          above_[i].set(j);
        }
      }
    }

    // Hasse diagram: strict predecessors not reachable through another one.
    lower_covers_.assign(k, {});
    for (std::size_t j = 0; j < k; ++j) {
      OrbitMask strict = below_[j];
      strict.reset(j);
      OrbitMask indirect;
      for (std::size_t i = 0; i < k; ++i) {
        if (!strict.test(i)) continue;
        OrbitMask s = below_[i];
        s.reset(i);
        indirect |= s;
      }
      lower_covers_[j] = strict & ~indirect;
    }

    // Orbits are listed by smallest member; check it is a linear extension.
    linext_.resize(k);
    std::iota(linext_.begin(), linext_.end(), 0);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = j + 1; i < k; ++i) {
        if (below_[j].test(i)) {
          throw InternalError("smallest-member order is not a linear extension: orbit " +
                              std::to_string(orbits_[i].front()) + " lies below orbit " +
                              std::to_string(orbits_[j].front()));
        }
      }
    }
  }

  int vars() const { return n_; }
  std::size_t size() const { return orbits_.size(); }
  const std::vector<Orbit>& orbits() const { return orbits_; }
  const Orbit& orbit(std::size_t i) const { return orbits_[i]; }
  int orbit_of(std::size_t subset) const { return orbit_of_[subset]; }

  /// O_i <= O_j.
  bool leq(std::size_t i, std::size_t j) const { return below_[j].test(i); }

  /// All orbits <= O_j, including j.
  const OrbitMask& down_closure(std::size_t j) const { return below_[j]; }
  /// All orbits >= O_i, including i.
  const OrbitMask& up_closure(std::size_t i) const { return above_[i]; }
  const OrbitMask& lower_covers(std::size_t j) const { return lower_covers_[j]; }
  const std::vector<std::size_t>& linear_extension() const { return linext_; }

  std::vector<std::pair<std::size_t, std::size_t>> cover_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t j = 0; j < size(); ++j) {
      for (std::size_t i = 0; i < size(); ++i) {
        if (lower_covers_[j].test(i)) edges.emplace_back(i, j);
      }
    }
    return edges;
  }

  bool is_downset(const OrbitMask& s) const {
    for (std::size_t j = 0; j < size(); ++j) {
      if (s.test(j) && (below_[j] & ~s).any()) return false;
    }
    return true;
  }

  /// The fixed function whose 0-region is the given downset of orbits.
  Mbf to_function(const Downset& d) const {
    return generate(n_, [&](std::size_t subset) { return !d.members.test(static_cast<std::size_t>(orbit_of_[subset])); });
  }

  /// Hasse diagram in DOT, nodes labelled by smallest member.
  std::string to_dot() const {
    std::ostringstream out;
    out << "digraph orbits {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < size(); ++i) {
      out << "  o" << orbits_[i].front() << " [label=\"" << orbits_[i].front() << "\"];\n";
    }
    for (auto [lo, hi] : cover_edges()) {
      out << "  o" << orbits_[lo].front() << " -> o" << orbits_[hi].front() << ";\n";
    }
    out << "}\n";
    return out.str();
  }

 private:
  int n_ = 0;
  std::vector<Orbit> orbits_;
  std::vector<int> orbit_of_;
  std::vector<OrbitMask> below_;
  std::vector<OrbitMask> above_;
  std::vector<OrbitMask> lower_covers_;
  std::vector<std::size_t> linext_;
};

inline OrbitPoset build_poset(const BitPerm& bp) { return OrbitPoset(bp); }

/// Every downset exactly once. Orbits are added in linear-extension order;
/// b ∪ {a} is produced from an existing b iff all lower covers of a lie in b,
/// so each downset arises once, from its last element in that order.
inline std::vector<Downset> enumerate_downsets(const OrbitPoset& p, std::size_t budget = std::size_t{100'000'000}) {
  std::vector<Downset> sets{Downset{}};
  for (std::size_t a : p.linear_extension()) {
    const OrbitMask& need = p.lower_covers(a);
    const std::size_t existing = sets.size();
    for (std::size_t i = 0; i < existing; ++i) {
      if ((need & ~sets[i].members).none()) {
        if (sets.size() >= budget) {
          throw ResourceError("downset enumeration exceeds the budget of " + std::to_string(budget) +
                              " downsets; use count_downsets or a counting strategy");
        }
        Downset d = sets[i];
        d.members.set(a);
        sets.push_back(d);
      }
    }
  }
  return sets;
}

namespace detail {

struct OrbitMaskHash {
  std::size_t operator()(const OrbitMask& m) const noexcept { return std::hash<OrbitMask>{}(m); }
};

/// Counts downsets by branching on one orbit x of the remaining set R:
///   count(R) = count(R \ up(x)) + count(R \ down(x)),
/// memoized on R. Orbits are renumbered so that the first remaining one is
/// the most comparable, which keeps both branches small.
class DownsetCounter {
 public:
  DownsetCounter(const OrbitPoset& p, std::size_t max_states, std::size_t memo_cap, const ProgressFn& progress)
      : max_states_(max_states), memo_cap_(memo_cap), progress_(progress) {
    const std::size_t k = p.size();
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> score(k);
    for (std::size_t i = 0; i < k; ++i) score[i] = p.up_closure(i).count() * p.down_closure(i).count();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return score[a] > score[b]; });
    std::vector<std::size_t> rank(k);
    for (std::size_t r = 0; r < k; ++r) rank[order[r]] = r;
    up_.assign(k, {});
    down_.assign(k, {});
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (p.up_closure(i).test(j)) up_[rank[i]].set(rank[j]);
        if (p.down_closure(i).test(j)) down_[rank[i]].set(rank[j]);
      }
    }
    for (std::size_t r = 0; r < k; ++r) all_.set(r);
  }

  std::optional<Count> run() {
    const Count c = count(all_);
    if (aborted_) return std::nullopt;
    return c;
  }

  std::size_t states() const { return states_; }

 private:
  Count count(const OrbitMask& rest) {
    if (aborted_) return 0;
    if (rest.none()) return 1;
    const std::size_t size = rest.count();
    if (size == 1) return 2;
    if (auto it = memo_.find(rest); it != memo_.end()) return it->second;
    if (++states_ > max_states_) {
      aborted_ = true;
      return 0;
    }
    if (progress_ && (states_ & ((std::size_t{1} << 20) - 1)) == 0) {
      progress_("count_downsets states", static_cast<double>(states_) / static_cast<double>(max_states_));
    }
    const std::size_t x = rest._Find_first();
    const Count c = checked_add(count(rest & ~up_[x]), count(rest & ~down_[x]));
    if (memo_.size() < memo_cap_) memo_.emplace(rest, c);
    return c;
  }

  std::vector<OrbitMask> up_;
  std::vector<OrbitMask> down_;
  OrbitMask all_;
  std::size_t max_states_;
  std::size_t memo_cap_;
  const ProgressFn& progress_;
  std::size_t states_ = 0;
  bool aborted_ = false;
  std::unordered_map<OrbitMask, Count, OrbitMaskHash> memo_;
};

}  // namespace detail

/// Number of downsets without materializing them. Gives up (nullopt) after
/// max_states distinct branch states.
inline std::optional<Count> try_count_downsets(const OrbitPoset& p, std::size_t max_states,
                                               const ProgressFn& progress = {}) {
  detail::DownsetCounter counter(p, max_states, std::size_t{1} << 22, progress);
  return counter.run();
}

/// Number of downsets of p; progress is reported every 2^20 states.
inline Count count_downsets(const OrbitPoset& p, const ProgressFn& progress = {}) {
  return *try_count_downsets(p, ~std::size_t{0}, progress);
}

/// Size of the largest antichain: |P| minus a maximum matching in the
/// bipartite graph of strict comparabilities (Dilworth / Fulkerson).
inline std::size_t width(const OrbitPoset& p) {
  const std::size_t k = p.size();
  std::vector<int> match_right(k, -1);
  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) -> bool {
    for (std::size_t v = 0; v < k; ++v) {
      if (v == u || !p.leq(u, v) || visited[v]) continue;
      visited[v] = 1;
      if (match_right[v] < 0 || augment(static_cast<std::size_t>(match_right[v]))) {
        match_right[v] = static_cast<int>(u);
        return true;
      }
    }
    return false;
  };
  std::size_t matching = 0;
  for (std::size_t u = 0; u < k; ++u) {
    visited.assign(k, 0);
    if (augment(u)) ++matching;
  }
  return k - matching;
}

}  // namespace mbfcount
