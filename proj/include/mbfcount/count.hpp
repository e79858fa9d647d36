#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace mbfcount {

/// Exact counter type. The largest quantity handled is sum(mu * phi) at
/// n = 8, about 5.6e22 * 1 + smaller terms, far below 2^128.
using Count = unsigned __int128;

inline std::string to_decimal(Count value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

inline Count parse_count(std::string_view text) {
  if (text.empty()) throw InputError("empty integer literal");
  constexpr Count kMax = ~Count{0};
  Count value = 0;
  for (char c : text) {
    if (c == ',' || c == '_') continue;
    if (c < '0' || c > '9') throw InputError("not a decimal integer: '" + std::string(text) + "'");
    const auto digit = static_cast<unsigned>(c - '0');
    if (value > (kMax - digit) / 10) throw InputError("integer does not fit in 128 bits: " + std::string(text));
    value = value * 10 + digit;
  }
  return value;
}

inline Count checked_mul(Count a, Count b) {
  if (a != 0 && b > (~Count{0}) / a) throw IntegrityError("128-bit overflow in product");
  return a * b;
}

inline Count checked_add(Count a, Count b) {
  if (b > (~Count{0}) - a) throw IntegrityError("128-bit overflow in sum");
  return a + b;
}

}  // namespace mbfcount
