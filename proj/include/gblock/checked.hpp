#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gblock {

// Raised instead of wrapping when an exact integer result does not fit.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

using Int = std::int64_t;
using Wide = __int128;

namespace checked {

template <typename T>
T add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

template <typename T>
T sub(T a, T b) {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

template <typename T>
T mul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace checked

// Decimal rendering for the 128-bit type; std::to_string has no overload for it.
inline std::string to_decimal(Wide v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  std::string s;
  while (v != 0) {
    int digit = static_cast<int>(v % 10);
    s.push_back(static_cast<char>('0' + (neg ? -digit : digit)));
    v /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

}  // namespace gblock
