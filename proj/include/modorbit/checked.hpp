#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>

#include "modorbit/error.hpp"

namespace modorbit {

/// Signed 128-bit integer used for every quantity in the library.
using Int = __int128;

namespace checked {

inline Int add(Int lhs, Int rhs) {
  Int out;
  if (__builtin_add_overflow(lhs, rhs, &out)) throw Error(ErrorCode::Overflow, "addition");
  return out;
}

inline Int sub(Int lhs, Int rhs) {
  Int out;
  if (__builtin_sub_overflow(lhs, rhs, &out)) throw Error(ErrorCode::Overflow, "subtraction");
  return out;
}

inline Int mul(Int lhs, Int rhs) {
  Int out;
  if (__builtin_mul_overflow(lhs, rhs, &out)) throw Error(ErrorCode::Overflow, "multiplication");
  return out;
}

inline Int neg(Int value) { return sub(0, value); }

inline Int abs(Int value) { return value < 0 ? neg(value) : value; }

}  // namespace checked

inline std::string to_string(Int value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work with non-positive values so INT128_MIN needs no special case.
  Int rest = negative ? value : -value;
  std::string digits;
  while (rest != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(rest % 10)));
    rest /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

/// Parses an optionally signed decimal integer; throws ParseError or Overflow.
inline Int parse_int(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty integer");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw Error(ErrorCode::ParseError, "no digits in '" + std::string(text) + "'");
  Int value = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch < '0' || ch > '9') throw Error(ErrorCode::ParseError, "bad integer '" + std::string(text) + "'");
    value = checked::sub(checked::mul(value, 10), ch - '0');
  }
  return negative ? value : checked::neg(value);
}

}  // namespace modorbit
