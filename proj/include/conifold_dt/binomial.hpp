#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace conifold_dt {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Exact binomial coefficient with the convention C(a,b) = 0 when b < 0 or
/// b > a (including every negative a).
inline BigInt binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

inline std::uint64_t binomial_u64(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  // C(a, i) * (a - i) is divisible by i + 1; stays below 2^64 for a <= 63.
  unsigned __int128 r = 1;
  for (int i = 0; i < b; ++i) r = r * static_cast<unsigned>(a - i) / static_cast<unsigned>(i + 1);
  return static_cast<std::uint64_t>(r);
}

}  // namespace conifold_dt
