#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace mbfcount {

inline constexpr int kMaxVars = 8;

/// A Boolean function of up to eight variables stored as its truth table.
///
/// Truth-table index i encodes the input subset where variable x_j
/// contributes 2^(j-1). The table read left to right (index 0 first) is the
/// big-endian binary representation of the function's integer rendering, so
/// for n = 3 the table 00001111 renders as 15. Internally the rendering is
/// kept as a 256-bit little-endian word array: truth-table index i lives at
/// rendering bit (2^n - 1 - i).
///
/// An Mbf value is not required to be monotone; use is_monotone() to check.
/// Functions that produce monotone results document so.
class Mbf {
 public:
  using Words = std::array<std::uint64_t, 4>;

  Mbf() = default;

  static Mbf zeros(int n) { return Mbf(checked_vars(n), Words{}); }

  static Mbf ones(int n) {
    Mbf f(checked_vars(n), Words{});
    f.words_ = f.mask();
    return f;
  }

  /// From the integer rendering; rejects values wider than 2^n bits.
  static Mbf from_words(int n, const Words& rendering) {
    Mbf f(checked_vars(n), rendering);
    const Words m = f.mask();
    for (std::size_t w = 0; w < 4; ++w) {
      if ((rendering[w] & ~m[w]) != 0) throw InputError("rendering wider than 2^n bits for n=" + std::to_string(n));
    }
    return f;
  }

  static Mbf from_u64(int n, std::uint64_t rendering) { return from_words(n, Words{rendering, 0, 0, 0}); }

  /// From truth-table bits, index 0 first.
  static Mbf from_bits(int n, std::span<const bool> bits) {
    checked_vars(n);
    if (bits.size() != (std::size_t{1} << n)) {
      throw InputError("bit vector of length " + std::to_string(bits.size()) + " does not match 2^" + std::to_string(n));
    }
    Mbf f(n, Words{});
    for (std::size_t i = 0; i < bits.size(); ++i) f.set(i, bits[i]);
    return f;
  }

  /// From a truth-table string such as "00010111"; its length fixes n.
  static Mbf from_table(std::string_view table) {
    int n = 0;
    while (n <= kMaxVars && (std::size_t{1} << n) < table.size()) ++n;
    if (n > kMaxVars || (std::size_t{1} << n) != table.size()) {
      throw InputError("truth table length must be a power of two up to 256, got " + std::to_string(table.size()));
    }
    Mbf f(n, Words{});
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] != '0' && table[i] != '1') throw InputError("truth table must contain only 0 and 1");
      f.set(i, table[i] == '1');
    }
    return f;
  }

  /// From a decimal integer rendering.
  static Mbf from_decimal(int n, std::string_view text) {
    checked_vars(n);
    if (text.empty()) throw InputError("empty decimal rendering");
    Words acc{};
    for (char c : text) {
      if (c < '0' || c > '9') throw InputError("not a decimal integer: '" + std::string(text) + "'");
      // acc = acc * 10 + digit, detecting overflow past 256 bits.
      unsigned __int128 carry = static_cast<unsigned>(c - '0');
      for (auto& w : acc) {
        const unsigned __int128 v = static_cast<unsigned __int128>(w) * 10 + carry;
        w = static_cast<std::uint64_t>(v);
        carry = v >> 64;
      }
      if (carry != 0) throw InputError("rendering exceeds 256 bits");
    }
    return from_words(n, acc);
  }

  int vars() const { return n_; }
  std::size_t size() const { return std::size_t{1} << n_; }
  const Words& words() const { return words_; }

  /// Rendering as a 64-bit integer; only valid for n <= 6.
  std::uint64_t to_u64() const {
    if (n_ > 6) throw InputError("rendering of an n=" + std::to_string(n_) + " function does not fit 64 bits");
    return words_[0];
  }

  /// Value at truth-table index i (the subset with index i).
  bool bit(std::size_t index) const {
    const std::size_t pos = size() - 1 - index;
    return ((words_[pos >> 6] >> (pos & 63)) & 1u) != 0;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_zero() const { return words_ == Words{}; }
  bool is_ones() const { return words_ == mask(); }

  std::string to_table() const {
    std::string s(size(), '0');
    for (std::size_t i = 0; i < size(); ++i) s[i] = bit(i) ? '1' : '0';
    return s;
  }

  std::string to_decimal() const {
    Words v = words_;
    std::string out;
    auto nonzero = [&v] { return v[0] | v[1] | v[2] | v[3]; };
    if (!nonzero()) return "0";
    while (nonzero()) {
      unsigned __int128 rem = 0;
      for (int w = 3; w >= 0; --w) {
        const unsigned __int128 cur = (rem << 64) | v[static_cast<std::size_t>(w)];
        v[static_cast<std::size_t>(w)] = static_cast<std::uint64_t>(cur / 10);
        rem = cur % 10;
      }
      out.push_back(static_cast<char>('0' + static_cast<int>(rem)));
    }
    return {out.rbegin(), out.rend()};
  }

  friend Mbf operator&(const Mbf& a, const Mbf& b) {
    same_vars(a, b);
    Mbf r(a.n_, Words{});
    for (std::size_t w = 0; w < 4; ++w) r.words_[w] = a.words_[w] & b.words_[w];
    return r;
  }

  friend Mbf operator|(const Mbf& a, const Mbf& b) {
    same_vars(a, b);
    Mbf r(a.n_, Words{});
    for (std::size_t w = 0; w < 4; ++w) r.words_[w] = a.words_[w] | b.words_[w];
    return r;
  }

  friend bool operator==(const Mbf&, const Mbf&) = default;

  /// Orders by variable count, then by integer rendering.
  friend std::strong_ordering operator<=>(const Mbf& a, const Mbf& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (int w = 3; w >= 0; --w) {
      const auto i = static_cast<std::size_t>(w);
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  /// Rendering mask with the low 2^n bits set.
  Words mask() const {
    Words m{};
    const std::size_t bits = size();
    for (std::size_t w = 0; w < 4; ++w) {
      const std::size_t lo = w * 64;
      if (bits >= lo + 64) m[w] = ~std::uint64_t{0};
      else if (bits > lo) m[w] = (std::uint64_t{1} << (bits - lo)) - 1;
    }
    return m;
  }

 private:
  Mbf(int n, Words words) : n_(n), words_(words) {}

  static int checked_vars(int n) {
    if (n < 0 || n > kMaxVars) throw InputError("variable count must be in 0..8, got " + std::to_string(n));
    return n;
  }

  static void same_vars(const Mbf& a, const Mbf& b) {
    if (a.n_ != b.n_) {
      throw InputError("functions of different arity: " + std::to_string(a.n_) + " vs " + std::to_string(b.n_));
    }
  }

  void set(std::size_t index, bool value) {
    const std::size_t pos = size() - 1 - index;
    const std::uint64_t bit = std::uint64_t{1} << (pos & 63);
    if (value) words_[pos >> 6] |= bit;
    else words_[pos >> 6] &= ~bit;
  }

  friend Mbf concat(const Mbf& a, const Mbf& b);
  friend std::pair<Mbf, Mbf> split(const Mbf& f);
  friend Mbf dual(const Mbf& f);
  template <typename Fn>
  friend Mbf generate(int n, Fn&& value_at);

  int n_ = 0;
  Words words_{};
};

/// Builds an n-variable function from value_at(index) for every truth-table index.
template <typename Fn>
Mbf generate(int n, Fn&& value_at) {
  Mbf f = Mbf::zeros(n);
  for (std::size_t i = 0; i < f.size(); ++i) f.set(i, static_cast<bool>(value_at(i)));
  return f;
}

/// True iff every covering pair (i, i + {x_j}) satisfies bits[i] <= bits[i + {x_j}].
inline bool is_monotone(std::span<const bool> bits, int n) {
  if (n < 0 || n > kMaxVars || bits.size() != (std::size_t{1} << n)) {
    throw InputError("bit vector of length " + std::to_string(bits.size()) + " does not match 2^" + std::to_string(n));
  }
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (!bits[i]) continue;
    for (int j = 0; j < n; ++j) {
      const std::size_t up = i | (std::size_t{1} << j);
      if (up != i && !bits[up]) return false;
    }
  }
  return true;
}

inline bool is_monotone(const Mbf& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f.bit(i)) continue;
    for (int j = 0; j < f.vars(); ++j) {
      const std::size_t up = i | (std::size_t{1} << j);
      if (up != i && !f.bit(up)) return false;
    }
  }
  return true;
}

/// a ⪯ b: every set bit of a is set in b, tested as (a | b) == b.
inline bool leq(const Mbf& a, const Mbf& b) { return (a | b) == b; }

/// The n+1 variable function whose x_{n+1}-absent half is a and present half is b.
/// Requires a ⪯ b, which keeps the result monotone when a and b are.
inline Mbf concat(const Mbf& a, const Mbf& b) {
  if (a.vars() != b.vars()) throw InputError("concat of functions with different arity");
  if (a.vars() >= kMaxVars) throw InputError("concat would exceed 8 variables");
  if (!leq(a, b)) throw PreconditionError("concat requires a ⪯ b (a=" + a.to_decimal() + ", b=" + b.to_decimal() + ")");
  Mbf r(a.vars() + 1, Mbf::Words{});
  const std::size_t shift = a.size();
  // rendering = (a << 2^n) | b
  for (std::size_t w = 0; w < 4; ++w) {
    r.words_[w] = b.words_[w];
  }
  const std::size_t word_shift = shift / 64;
  const std::size_t bit_shift = shift % 64;
  for (std::size_t w = 0; w < 4; ++w) {
    const std::size_t dst = w + word_shift;
    if (dst < 4) r.words_[dst] |= a.words_[w] << bit_shift;
    if (bit_shift != 0 && dst + 1 < 4) r.words_[dst + 1] |= a.words_[w] >> (64 - bit_shift);
  }
  return r;
}

/// Inverse of concat: (half without x_n, half with x_n).
inline std::pair<Mbf, Mbf> split(const Mbf& f) {
  if (f.vars() < 1) throw InputError("split needs at least one variable");
  const int n = f.vars() - 1;
  Mbf without(n, Mbf::Words{});
  Mbf with(n, Mbf::Words{});
  const std::size_t half = std::size_t{1} << n;
  for (std::size_t i = 0; i < half; ++i) {
    without.set(i, f.bit(i));
    with.set(i, f.bit(i + half));
  }
  return {without, with};
}

/// Reverses and complements the truth table: dual(f)(S) = !f(complement of S).
inline Mbf dual(const Mbf& f) {
  Mbf r(f.vars(), Mbf::Words{});
  const std::size_t last = f.size() - 1;
  for (std::size_t i = 0; i < f.size(); ++i) r.set(i, !f.bit(last - i));
  return r;
}

inline Mbf meet(const Mbf& a, const Mbf& b) { return a & b; }
inline Mbf join(const Mbf& a, const Mbf& b) { return a | b; }

}  // namespace mbfcount
