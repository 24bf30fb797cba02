#pragma once

// Checked integer helpers. Every product that can grow with user input goes
// through these; an overflow raises OverflowError instead of wrapping.

#include <cstdint>
#include <numeric>
#include <string>

#include "divcalc/error.hpp"

namespace divcalc {

using Int = std::int64_t;
using Wide = __int128;

namespace arith {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("64-bit overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Wide wadd(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit overflow in addition");
  return r;
}

inline Wide wsub(Wide a, Wide b) {
  Wide r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("128-bit overflow in subtraction");
  return r;
}

inline Wide wmul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit overflow in multiplication");
  return r;
}

inline Int narrow(Wide a) {
  if (a > Wide(INT64_MAX) || a < Wide(INT64_MIN)) throw OverflowError("value does not fit in 64 bits");
  return static_cast<Int>(a);
}

/// Mathematical modulus: result in [0, m) for m > 0.
inline Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

/// floor(sqrt(n)) for n >= 0.
inline Wide isqrt(Wide n) {
  if (n < 0) throw PreconditionError("isqrt of a negative number");
  if (n < 2) return n;
  // Newton iteration from an overestimate; monotone decreasing to the floor root.
  Wide x = n;
  Wide y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

inline std::string to_string(Wide v) {
  if (v == 0) return "0";
  bool negative = v < 0;
  std::string out;
  // Avoid negating INT128_MIN by working digit-wise on the signed value.
  while (v != 0) {
    int digit = static_cast<int>(v % 10);
    if (digit < 0) digit = -digit;
    out.insert(out.begin(), static_cast<char>('0' + digit));
    v /= 10;
  }
  if (negative) out.insert(out.begin(), '-');
  return out;
}

}  // namespace arith
}  // namespace divcalc
