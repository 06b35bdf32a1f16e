#pragma once

#include <concepts>
#include <cstdint>
#include <limits>
#include <numeric>

#include "irregular/errors.hpp"

namespace irregular {

using i64 = std::int64_t;
__extension__ typedef __int128 i128;

namespace detail {
template <typename T>
concept wide_integer = std::same_as<T, i64> || std::same_as<T, i128>;
}

template <detail::wide_integer T> T checked_add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in addition");
  return r;
}

template <detail::wide_integer T> T checked_sub(T a, T b) {
  T r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("integer overflow in subtraction");
  return r;
}

template <detail::wide_integer T> T checked_mul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in multiplication");
  return r;
}

/// Narrows to 64 bits, throwing when the value does not fit.
inline i64 narrow(i128 v) {
  if (v > std::numeric_limits<i64>::max() ||
      v < std::numeric_limits<i64>::min())
    throw OverflowError("value exceeds signed 64-bit range");
  return static_cast<i64>(v);
}

/// base^exp with overflow detection; exp >= 0.
inline i64 checked_pow(i64 base, i64 exp) {
  i64 result = 1;
  while (exp > 0) {
    if (exp & 1)
      result = checked_mul(result, base);
    exp >>= 1;
    if (exp > 0)
      base = checked_mul(base, base);
  }
  return result;
}

/// Largest k with k*k <= v, v >= 0.
inline i128 isqrt(i128 v) {
  if (v < 0)
    throw DomainError("isqrt of a negative number");
  if (v < 2)
    return v;
  const auto hi = static_cast<unsigned long long>(v >> 64);
  const auto lo = static_cast<unsigned long long>(v);
  const int bits = hi != 0 ? 128 - __builtin_clzll(hi) : 64 - __builtin_clzll(lo);
  // 2^ceil(bits/2) >= sqrt(v); Newton from above decreases monotonically.
  i128 x = static_cast<i128>(1) << ((bits + 1) / 2);
  for (;;) {
    i128 y = (x + v / x) / 2;
    if (y >= x)
      break;
    x = y;
  }
  while (x * x > v)
    --x;
  while ((x + 1) * (x + 1) <= v)
    ++x;
  return x;
}

inline i64 isqrt(i64 v) { return static_cast<i64>(isqrt(static_cast<i128>(v))); }

/// Floor division for a signed numerator and positive denominator.
inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && (a < 0))
    --q;
  return q;
}

inline i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

/// LCM with overflow detection.
inline i64 checked_lcm(i64 a, i64 b) {
  return checked_mul(a / std::gcd(a, b), b);
}

} // namespace irregular
