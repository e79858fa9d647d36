#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "count.hpp"
#include "errors.hpp"
#include "mbf.hpp"
#include "packed.hpp"

namespace mbfcount {

/// Sorted, duplicate-free set of monotone functions sharing one arity.
class MbfSet {
 public:
  MbfSet() = default;

  /// Sorts and deduplicates; every element must have arity n and be monotone.
  MbfSet(int n, std::vector<Mbf> elements) : n_(n), elements_(std::move(elements)) {
    for (const Mbf& f : elements_) {
      if (f.vars() != n) throw InputError("MbfSet element of arity " + std::to_string(f.vars()) + " in a set of arity " + std::to_string(n));
      if (!is_monotone(f)) throw InputError("MbfSet element " + f.to_decimal() + " is not monotone");
    }
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  }

  /// From packed renderings already known to be sorted and monotone.
  static MbfSet from_sorted_packed(int n, const std::vector<std::uint64_t>& renderings) {
    MbfSet s;
    s.n_ = n;
    s.elements_.reserve(renderings.size());
    for (std::uint64_t r : renderings) s.elements_.push_back(Mbf::from_u64(n, r));
    return s;
  }

  int vars() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<Mbf>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  const Mbf& operator[](std::size_t i) const { return elements_[i]; }

  bool contains(const Mbf& f) const { return std::binary_search(elements_.begin(), elements_.end(), f); }

  std::vector<std::uint64_t> packed() const { return packed::to_packed(elements_); }

  friend bool operator==(const MbfSet&, const MbfSet&) = default;

 private:
  int n_ = 0;
  std::vector<Mbf> elements_;
};

struct EnumerationLimits {
  /// Largest n materialized. D_7 has 2.4e12 elements and is never stored.
  int max_vars = 6;
};

namespace detail {

inline std::vector<std::uint64_t> packed_dn(int n) {
  std::vector<std::uint64_t> level{0, 1};
  for (int k = 0; k < n; ++k) {
    level = packed::extend_by_fixed_variable(level, k, std::size_t{1} << 32);
  }
  return level;
}

}  // namespace detail

/// D_n built by repeated doubling from D_0 = {0, 1}.
inline MbfSet enumerate_dn(int n, const EnumerationLimits& limits = {}) {
  if (n < 0 || n > kMaxVars) throw InputError("enumerate_dn: n must be in 0..8, got " + std::to_string(n));
  if (n > limits.max_vars) {
    throw ResourceError("enumerate_dn: n=" + std::to_string(n) + " exceeds the enumeration cap max_vars=" +
                        std::to_string(limits.max_vars) + "; use a counting method or raise max_vars");
  }
  if (n > packed::kMaxPackedVars) {
    throw ResourceError("enumerate_dn: D_" + std::to_string(n) + " cannot be materialized in memory");
  }
  return MbfSet::from_sorted_packed(n, detail::packed_dn(n));
}

/// Memoized interval sizes over D_n for n <= 6:
///   down(f) = |{g in D_n : g ⪯ f}|,  up(f) = |{g in D_n : f ⪯ g}| = down(dual f).
///
/// down follows the half-split recurrence f = (f0, f1):
///   down_n(f) = sum over a1 in D_{n-1}, a1 ⪯ f1, of down_{n-1}(a1 & f0).
/// Memo tables fill lazily and are guarded by a mutex, so one counter can be
/// shared between threads.
class IntervalCounter {
 public:
  explicit IntervalCounter(int n) : n_(n) {
    if (n < 0 || n > packed::kMaxPackedVars) {
      throw InputError("IntervalCounter supports n in 0..6, got " + std::to_string(n));
    }
    levels_.resize(static_cast<std::size_t>(n) + 1);
    memo_.resize(static_cast<std::size_t>(n) + 1);
  }

  int vars() const { return n_; }

  Count down(const Mbf& f) const {
    check(f);
    std::lock_guard lock(mutex_);
    return down_at(n_, f.to_u64());
  }

  Count up(const Mbf& f) const {
    check(f);
    std::lock_guard lock(mutex_);
    return down_at(n_, packed::dual(f.to_u64(), n_));
  }

  /// Number of memoized entries across all levels.
  std::size_t memo_size() const {
    std::lock_guard lock(mutex_);
    std::size_t s = 0;
    for (const auto& m : memo_) s += m.size();
    return s;
  }

 private:
  void check(const Mbf& f) const {
    if (f.vars() != n_) throw InputError("IntervalCounter of arity " + std::to_string(n_) + " queried with arity " + std::to_string(f.vars()));
    if (!is_monotone(f)) throw InputError("IntervalCounter query " + f.to_decimal() + " is not monotone");
  }

  const std::vector<std::uint64_t>& level(int k) const {
    auto& l = levels_[static_cast<std::size_t>(k)];
    if (l.empty()) l = detail::packed_dn(k);
    return l;
  }

  Count down_at(int k, std::uint64_t f) const {
    if (k == 0) return f == 0 ? 1 : 2;
    auto& memo = memo_[static_cast<std::size_t>(k)];
    if (auto it = memo.find(f); it != memo.end()) return it->second;
    const unsigned half = 1u << (k - 1);
    const std::uint64_t low_mask = packed::width_mask(k - 1);
    const std::uint64_t f0 = f >> half;  // x_k absent
    const std::uint64_t f1 = f & low_mask;
    Count total = 0;
    for (std::uint64_t a1 : level(k - 1)) {
      if ((a1 | f1) == f1) total += down_at(k - 1, a1 & f0);
    }
    memo.emplace(f, total);
    return total;
  }

  int n_;
  mutable std::mutex mutex_;
  mutable std::vector<std::vector<std::uint64_t>> levels_;
  mutable std::vector<std::unordered_map<std::uint64_t, Count>> memo_;
};

/// Builds the counter for D_n; queries are answered lazily.
inline IntervalCounter interval_counts(int n) { return IntervalCounter(n); }

}  // namespace mbfcount
