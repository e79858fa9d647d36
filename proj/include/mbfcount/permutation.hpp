#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "count.hpp"
#include "errors.hpp"
#include "mbf.hpp"

namespace mbfcount {

/// Cycle type of a permutation of n variables: a partition of n.
///
/// lengths() is padded with 1-cycles and sorted descending. total_length()
/// is the number of variables moved by the non-trivial cycles, so (12)(345)
/// at n = 8 has total length 5.
class CycleType {
 public:
  CycleType() = default;

  /// Any order of lengths is accepted; 1-cycles are added up to n.
  CycleType(int n, std::vector<int> lengths) : n_(n) {
    if (n < 0 || n > kMaxVars) throw InputError("cycle type arity must be in 0..8, got " + std::to_string(n));
    int sum = 0;
    for (int l : lengths) {
      if (l < 1) throw InputError("cycle lengths must be positive");
      sum += l;
    }
    if (sum > n) {
      throw InputError("cycle lengths sum to " + std::to_string(sum) + ", more than n=" + std::to_string(n));
    }
    lengths.insert(lengths.end(), static_cast<std::size_t>(n - sum), 1);
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    lengths_ = std::move(lengths);
  }

  static CycleType identity(int n) { return CycleType(n, {}); }

  /// Parses "3+2" style text: lengths joined by '+', 1-cycles implied.
  /// "1" (or "id") denotes the identity.
  static CycleType parse(std::string_view text, int n) {
    if (text == "id" || text == "identity") return identity(n);
    std::vector<int> lengths;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t plus = std::min(text.find('+', pos), text.size());
      const std::string_view token = text.substr(pos, plus - pos);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value < 1) {
        throw InputError("cannot parse cycle type '" + std::string(text) + "'; expected lengths joined by '+', e.g. 3+2");
      }
      lengths.push_back(value);
      pos = plus + 1;
    }
    return CycleType(n, std::move(lengths));
  }

  int vars() const { return n_; }
  const std::vector<int>& lengths() const { return lengths_; }

  /// Lengths of the non-trivial cycles, ascending (the order used in tables).
  std::vector<int> nontrivial() const {
    std::vector<int> out;
    for (int l : lengths_) {
      if (l > 1) out.push_back(l);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  int total_length() const {
    int t = 0;
    for (int l : lengths_) t += l > 1 ? l : 0;
    return t;
  }

  bool is_identity() const { return total_length() == 0; }

  bool is_involution() const {
    return std::all_of(lengths_.begin(), lengths_.end(), [](int l) { return l <= 2; });
  }

  bool has_two_cycle() const { return std::find(lengths_.begin(), lengths_.end(), 2) != lengths_.end(); }

  /// Same non-trivial cycles over a different number of variables.
  CycleType with_vars(int n) const { return CycleType(n, nontrivial()); }

  /// Removes one 2-cycle and two variables.
  CycleType without_two_cycle() const {
    std::vector<int> rest = nontrivial();
    auto it = std::find(rest.begin(), rest.end(), 2);
    if (it == rest.end()) throw PreconditionError("cycle type " + notation() + " has no 2-cycle");
    rest.erase(it);
    return CycleType(n_ - 2, std::move(rest));
  }

  /// Table notation: "(12)(345)", identity as "(1)". Variables above 9 are not
  /// reachable since n <= 8.
  std::string notation() const {
    const auto cycles = nontrivial();
    if (cycles.empty()) return "(1)";
    std::string s;
    int next = 1;
    for (int l : cycles) {
      s += '(';
      for (int j = 0; j < l; ++j) s += static_cast<char>('0' + next++);
      s += ')';
    }
    return s;
  }

  /// The '+'-joined form accepted by parse(); identity renders as "1".
  std::string text() const {
    const auto cycles = nontrivial();
    if (cycles.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (i) s += '+';
      s += std::to_string(cycles[i]);
    }
    return s;
  }

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  int n_ = 0;
  std::vector<int> lengths_;
};

/// All partitions of n, descending parts, in lexicographically decreasing order.
/// n = 0 yields the single empty partition (the identity on no variables).
inline std::vector<CycleType> partitions(int n) {
  if (n < 0 || n > kMaxVars) throw InputError("partitions: n must be in 0..8, got " + std::to_string(n));
  std::vector<CycleType> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(n, current);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Row order of the result tables: by number of non-trivial cycles, then by
/// ascending cycle lengths. Yields (1), (12), (123), ..., (12)(34), (12)(345), ...
inline bool table_order_less(const CycleType& a, const CycleType& b) {
  const auto ca = a.nontrivial();
  const auto cb = b.nontrivial();
  if (ca.size() != cb.size()) return ca.size() < cb.size();
  return ca < cb;
}

inline std::vector<CycleType> partitions_in_table_order(int n) {
  auto p = partitions(n);
  std::stable_sort(p.begin(), p.end(), table_order_less);
  return p;
}

inline Count factorial(int n) {
  Count f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<Count>(i);
  return f;
}

/// Number of permutations of the given cycle type:
/// n! / (prod l_j^{k_j} * prod k_j!), with 1-cycles included in the k_j.
inline Count mu(const CycleType& t) {
  Count denom = 1;
  const auto& ls = t.lengths();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const int k = static_cast<int>(j - i);
    for (int r = 0; r < k; ++r) denom *= static_cast<Count>(ls[i]);
    denom *= factorial(k);
    i = j;
  }
  return factorial(t.vars()) / denom;
}

/// Permutation of variables x_1..x_n; image(j) is the 0-based image of x_{j+1}.
class VarPerm {
 public:
  VarPerm() = default;

  explicit VarPerm(std::vector<int> image) : image_(std::move(image)) {
    const int n = vars();
    if (n > kMaxVars) throw InputError("at most 8 variables");
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw InputError("variable mapping is not a bijection");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static VarPerm identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return VarPerm(std::move(img));
  }

  int vars() const { return static_cast<int>(image_.size()); }
  int operator()(int j) const { return image_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& image() const { return image_; }

  /// (p * q)(j) = p(q(j)).
  friend VarPerm compose(const VarPerm& p, const VarPerm& q) {
    if (p.vars() != q.vars()) throw InputError("composing permutations of different arity");
    std::vector<int> img(p.image_.size());
    for (std::size_t j = 0; j < img.size(); ++j) img[j] = p(q(static_cast<int>(j)));
    return VarPerm(std::move(img));
  }

  VarPerm inverse() const {
    std::vector<int> img(image_.size());
    for (std::size_t j = 0; j < img.size(); ++j) img[static_cast<std::size_t>(image_[j])] = static_cast<int>(j);
    return VarPerm(std::move(img));
  }

  /// Same mapping on x_1..x_m, with the new top variables fixed.
  VarPerm extended_to(int m) const {
    if (m < vars()) throw InputError("cannot shrink a permutation");
    std::vector<int> img = image_;
    for (int j = vars(); j < m; ++j) img.push_back(j);
    return VarPerm(std::move(img));
  }

  CycleType cycle_type() const {
    std::vector<int> lengths;
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t s = 0; s < image_.size(); ++s) {
      if (seen[s]) continue;
      int len = 0;
      for (std::size_t j = s; !seen[j]; j = static_cast<std::size_t>(image_[j])) {
        seen[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    return CycleType(vars(), std::move(lengths));
  }

  /// Cycle notation over variable numbers 1..n, fixed points omitted.
  std::string to_string() const {
    std::string s;
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t start = 0; start < image_.size(); ++start) {
      if (seen[start] || image_[start] == static_cast<int>(start)) continue;
      s += '(';
      for (std::size_t j = start; !seen[j]; j = static_cast<std::size_t>(image_[j])) {
        seen[j] = true;
        if (s.back() != '(') s += ' ';
        s += 'x' + std::to_string(j + 1);
      }
      s += ')';
    }
    return s.empty() ? "()" : s;
  }

  friend bool operator==(const VarPerm&, const VarPerm&) = default;

 private:
  std::vector<int> image_;
};

/// Representative of a cycle type: non-trivial cycles in ascending length
/// order on consecutive variables from x_1, fixed variables last. Type 2+3 at
/// n = 7 gives (x1 x2)(x3 x4 x5).
inline VarPerm canonical_perm(const CycleType& t) {
  std::vector<int> img(static_cast<std::size_t>(t.vars()));
  std::iota(img.begin(), img.end(), 0);
  int v = 0;
  for (int l : t.nontrivial()) {
    for (int j = 0; j < l; ++j) img[static_cast<std::size_t>(v + j)] = v + (j + 1) % l;
    v += l;
  }
  return VarPerm(std::move(img));
}

/// Permutation of the 2^n subset indices of B^n.
class BitPerm {
 public:
  BitPerm() = default;

  BitPerm(int n, std::vector<int> image) : n_(n), image_(std::move(image)) {
    if (n < 0 || n > kMaxVars || image_.size() != (std::size_t{1} << n)) throw InputError("BitPerm needs 2^n images");
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
      if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[static_cast<std::size_t>(v)]) {
        throw InputError("subset mapping is not a bijection");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  int vars() const { return n_; }
  std::size_t size() const { return image_.size(); }
  int operator()(std::size_t i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }

  friend BitPerm compose(const BitPerm& p, const BitPerm& q) {
    if (p.n_ != q.n_) throw InputError("composing subset permutations of different arity");
    std::vector<int> img(p.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = p(static_cast<std::size_t>(q(i)));
    return BitPerm(p.n_, std::move(img));
  }

  BitPerm inverse() const {
    std::vector<int> img(size());
    for (std::size_t i = 0; i < img.size(); ++i) img[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
    return BitPerm(n_, std::move(img));
  }

  /// Cycle decomposition such as "(0)(1 2 4)(3 6 5)(7)"; each cycle starts at
  /// its smallest index, cycles ordered by that index, fixed points included.
  std::string to_cycle_string() const {
    std::string s;
    std::vector<bool> seen(size(), false);
    for (std::size_t start = 0; start < size(); ++start) {
      if (seen[start]) continue;
      s += '(';
      for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(image_[i])) {
        seen[i] = true;
        if (i != start) s += ' ';
        s += std::to_string(i);
      }
      s += ')';
    }
    return s;
  }

  friend bool operator==(const BitPerm&, const BitPerm&) = default;

 private:
  int n_ = 0;
  std::vector<int> image_;
};

/// Subset i maps to the union of the images of its variables.
inline BitPerm lift(const VarPerm& p) {
  const int n = p.vars();
  std::vector<int> img(std::size_t{1} << n);
  for (std::size_t i = 0; i < img.size(); ++i) {
    int out = 0;
    for (int j = 0; j < n; ++j) {
      if ((i >> j) & 1u) out |= 1 << p(j);
    }
    img[i] = out;
  }
  return BitPerm(n, std::move(img));
}

/// g with g(bp(i)) = f(i). Preserves monotonicity when bp comes from lift().
inline Mbf apply(const BitPerm& bp, const Mbf& f) {
  if (bp.vars() != f.vars()) throw InputError("permutation and function differ in arity");
  const BitPerm inv = bp.inverse();
  return generate(f.vars(), [&](std::size_t i) { return f.bit(static_cast<std::size_t>(inv(i))); });
}

using Orbit = std::vector<int>;

/// Orbits of the subset permutation, each ascending, listed by smallest element.
inline std::vector<Orbit> orbits(const BitPerm& bp) {
  std::vector<Orbit> out;
  std::vector<bool> seen(bp.size(), false);
  for (std::size_t start = 0; start < bp.size(); ++start) {
    if (seen[start]) continue;
    Orbit o;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(bp(i))) {
      seen[i] = true;
      o.push_back(static_cast<int>(i));
    }
    std::sort(o.begin(), o.end());
    out.push_back(std::move(o));
  }
  return out;
}

/// f is constant on every orbit of bp.
inline bool is_fixed(const Mbf& f, const BitPerm& bp) {
  if (bp.vars() != f.vars()) throw InputError("permutation and function differ in arity");
  for (std::size_t i = 0; i < bp.size(); ++i) {
    if (f.bit(i) != f.bit(static_cast<std::size_t>(bp(i)))) return false;
  }
  return true;
}

}  // namespace mbfcount
