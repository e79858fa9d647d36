#pragma once

// Naive reference implementations for small n. These avoid the doubling,
// orbit-poset and interval machinery on purpose: every fast path is checked
// against a plain scan.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "count.hpp"
#include "errors.hpp"
#include "mbf.hpp"
#include "mbf_set.hpp"
#include "orbit_poset.hpp"
#include "permutation.hpp"

namespace mbfcount::oracle {

struct OracleConfig {
  int max_full_scan = 4;  // 2^(2^n) candidate tables
  int max_filter = 5;     // filtering D_n
};

/// D_n by scanning every truth table and testing all comparable subset pairs.
inline MbfSet oracle_enum_dn(int n, const OracleConfig& cfg = {}) {
  if (n < 0 || n > cfg.max_full_scan) throw InputError("oracle_enum_dn supports n <= " + std::to_string(cfg.max_full_scan));
  const std::size_t points = std::size_t{1} << n;
  const std::uint64_t tables = std::uint64_t{1} << points;
  std::vector<Mbf> found;
  for (std::uint64_t t = 0; t < tables; ++t) {
    // Table t, read with index 0 as most significant bit.
    auto value = [&](std::size_t subset) { return ((t >> (points - 1 - subset)) & 1u) != 0; };
    bool ok = true;
    for (std::size_t s = 0; s < points && ok; ++s) {
      for (std::size_t u = 0; u < points && ok; ++u) {
        const bool subset_of = (s & u) == s;
        if (subset_of && value(s) && !value(u)) ok = false;
      }
    }
    if (ok) found.push_back(Mbf::from_u64(n, t));
  }
  return MbfSet(n, std::move(found));
}

inline MbfSet oracle_domain(int n, const OracleConfig& cfg) {
  if (n <= cfg.max_full_scan) return oracle_enum_dn(n, cfg);
  if (n <= cfg.max_filter) return enumerate_dn(n);
  throw InputError("oracle supports n <= " + std::to_string(cfg.max_filter));
}

/// Number of f in D_n with f(p(S)) = f(S) for every subset S.
inline Count oracle_phi(const VarPerm& p, const OracleConfig& cfg = {}) {
  const int n = p.vars();
  const MbfSet domain = oracle_domain(n, cfg);
  const std::size_t points = std::size_t{1} << n;
  std::vector<std::size_t> image(points);
  for (std::size_t s = 0; s < points; ++s) {
    std::size_t t = 0;
    for (int v = 0; v < n; ++v) {
      if ((s >> v) & 1u) t |= std::size_t{1} << p(v);
    }
    image[s] = t;
  }
  Count fixed = 0;
  for (const Mbf& f : domain) {
    bool same = true;
    for (std::size_t s = 0; s < points && same; ++s) same = f.bit(s) == f.bit(image[s]);
    if (same) ++fixed;
  }
  return fixed;
}

/// Number of classes of D_n under variable permutations, by collecting the
/// smallest table-string representative of each function's class.
inline Count oracle_r(int n, const OracleConfig& cfg = {}) {
  if (n < 0 || n > cfg.max_full_scan) throw InputError("oracle_r supports n <= " + std::to_string(cfg.max_full_scan));
  const MbfSet domain = oracle_enum_dn(n, cfg);
  const std::size_t points = std::size_t{1} << n;
  std::set<std::string> representatives;
  for (const Mbf& f : domain) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
      std::string table(points, '0');
      for (std::size_t s = 0; s < points; ++s) {
        std::size_t t = 0;
        for (int v = 0; v < n; ++v) {
          if ((s >> v) & 1u) t |= std::size_t{1} << perm[static_cast<std::size_t>(v)];
        }
        table[t] = f.bit(s) ? '1' : '0';
      }
      if (best.empty() || table < best) best = table;
    } while (std::next_permutation(perm.begin(), perm.end()));
    representatives.insert(best);
  }
  return representatives.size();
}

/// Downsets of a poset with at most 20 orbits, by testing every subset.
inline Count oracle_downsets(const OrbitPoset& poset) {
  const std::size_t k = poset.size();
  if (k > 20) throw InputError("oracle_downsets supports at most 20 orbits, got " + std::to_string(k));
  Count closed = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
    bool ok = true;
    for (std::size_t hi = 0; hi < k && ok; ++hi) {
      if (!((s >> hi) & 1u)) continue;
      for (std::size_t lo = 0; lo < k && ok; ++lo) {
        if (poset.leq(lo, hi) && !((s >> lo) & 1u)) ok = false;
      }
    }
    if (ok) ++closed;
  }
  return closed;
}

/// Largest antichain by subset search; at most 20 orbits.
inline std::size_t oracle_width(const OrbitPoset& poset) {
  const std::size_t k = poset.size();
  if (k > 20) throw InputError("oracle_width supports at most 20 orbits");
  std::size_t best = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << k); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size <= best) continue;
    bool antichain = true;
    for (std::size_t a = 0; a < k && antichain; ++a) {
      for (std::size_t b = 0; b < k && antichain; ++b) {
        if (a != b && ((s >> a) & 1u) && ((s >> b) & 1u) && poset.leq(a, b)) antichain = false;
      }
    }
    if (antichain) best = size;
  }
  return best;
}

}  // namespace mbfcount::oracle
