#pragma once

// Word-level kernels for functions of at most six variables. A function is
// held as its 64-bit integer rendering (see Mbf); truth-table index i sits at
// bit (2^n - 1 - i).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "mbf.hpp"

namespace mbfcount::packed {

inline constexpr int kMaxPackedVars = 6;

inline std::uint64_t width_mask(int n) {
  const unsigned bits = 1u << n;
  return bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

inline std::uint64_t reverse64(std::uint64_t x) {
  x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
  x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
  x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
  return __builtin_bswap64(x);
}

/// Reverse-and-complement within the low 2^n bits.
inline std::uint64_t dual(std::uint64_t f, int n) {
  const unsigned bits = 1u << n;
  return ~(reverse64(f) >> (64 - bits)) & width_mask(n);
}

inline std::uint64_t index_bit(std::size_t index, int n) {
  return std::uint64_t{1} << ((std::size_t{1} << n) - 1 - index);
}

/// Maps a subset permutation of B^n (image[i] for each index i) onto renderings.
/// Uses eight byte-indexed tables so application costs eight lookups.
class BitPermuter {
 public:
  BitPermuter() = default;

  BitPermuter(int n, std::span<const int> image) : n_(n) {
    if (n < 0 || n > kMaxPackedVars || image.size() != (std::size_t{1} << n)) {
      throw InputError("packed permutation needs 2^n images with n <= 6");
    }
    for (std::size_t byte = 0; byte < 8; ++byte) {
      for (std::size_t v = 0; v < 256; ++v) {
        std::uint64_t out = 0;
        for (std::size_t b = 0; b < 8; ++b) {
          if (((v >> b) & 1u) == 0) continue;
          const std::size_t pos = byte * 8 + b;
          if (pos >= image.size()) continue;
          const std::size_t index = image.size() - 1 - pos;
          out |= index_bit(static_cast<std::size_t>(image[index]), n);
        }
        table_[byte][v] = out;
      }
    }
  }

  /// g with g(image(i)) = f(i).
  std::uint64_t operator()(std::uint64_t f) const {
    std::uint64_t out = 0;
    for (std::size_t byte = 0; byte < 8; ++byte) out |= table_[byte][(f >> (8 * byte)) & 0xFF];
    return out;
  }

  int vars() const { return n_; }

 private:
  int n_ = 0;
  std::uint64_t table_[8][256]{};
};

/// Open-addressing index from a sorted, duplicate-free element list to positions.
/// Stores only 32-bit slots; keys are compared through the element array.
class FlatIndex {
 public:
  static constexpr std::uint32_t kMissing = std::numeric_limits<std::uint32_t>::max();

  FlatIndex() = default;

  explicit FlatIndex(std::span<const std::uint64_t> elements) : elements_(elements) {
    if (elements.size() >= kMissing) throw ResourceError("family too large to index");
    std::size_t cap = 16;
    while (cap < elements.size() * 2) cap <<= 1;
    slots_.assign(cap, kMissing);
    mask_ = cap - 1;
    shift_ = 64 - static_cast<unsigned>(std::countr_zero(cap));
    for (std::size_t i = 0; i < elements.size(); ++i) {
      std::size_t s = slot(elements[i]);
      while (slots_[s] != kMissing) s = (s + 1) & mask_;
      slots_[s] = static_cast<std::uint32_t>(i);
    }
  }

  std::uint32_t find(std::uint64_t key) const {
    std::size_t s = slot(key);
    for (;;) {
      const std::uint32_t v = slots_[s];
      if (v == kMissing || elements_[v] == key) return v;
      s = (s + 1) & mask_;
    }
  }

  std::uint32_t at(std::uint64_t key) const {
    const std::uint32_t v = find(key);
    if (v == kMissing) throw InternalError("function " + std::to_string(key) + " missing from indexed family");
    return v;
  }

 private:
  std::size_t slot(std::uint64_t key) const {
    // Fibonacci hashing: the top bits of the product depend on every key bit.
    return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ULL) >> shift_);
  }

  std::span<const std::uint64_t> elements_;
  std::vector<std::uint32_t> slots_;
  std::size_t mask_ = 0;
  unsigned shift_ = 63;
};

/// Number of ordered pairs (a, b) of the family with a ⪯ b, i.e. (a | b) == b.
inline std::uint64_t count_leq_pairs_in(std::span<const std::uint64_t> family, std::size_t b_index) {
  const std::uint64_t b = family[b_index];
  std::uint64_t c = 0;
  for (std::uint64_t a : family) c += static_cast<std::uint64_t>((a | b) == b);
  return c;
}

/// One doubling step: {(a << 2^n) | b : a, b in family, a ⪯ b}, sorted.
inline std::vector<std::uint64_t> extend_by_fixed_variable(std::span<const std::uint64_t> family, int n,
                                                           std::size_t max_elements) {
  if (n >= kMaxPackedVars) throw InputError("packed extension limited to results with at most 6 variables");
  const unsigned shift = 1u << n;
  std::vector<std::uint64_t> out;
  for (std::uint64_t a : family) {
    for (std::uint64_t b : family) {
      if ((a | b) != b) continue;
      if (out.size() >= max_elements) {
        throw ResourceError("doubling to " + std::to_string(n + 1) + " variables exceeds the element budget of " +
                            std::to_string(max_elements));
      }
      out.push_back((a << shift) | b);
    }
  }
  // Sorted because family is sorted and a is the high half.
  return out;
}

inline std::vector<std::uint64_t> to_packed(std::span<const Mbf> functions) {
  std::vector<std::uint64_t> out;
  out.reserve(functions.size());
  for (const Mbf& f : functions) out.push_back(f.to_u64());
  return out;
}

}  // namespace mbfcount::packed
