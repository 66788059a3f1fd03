#pragma once
// Exact rational scalars on top of GMP's canonicalizing mpq_class.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sjp {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n) { return Rat(n); }

inline Rat rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int factorial(long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// n! / k!  for n >= k >= 0 (falling factorial of length n-k).
inline Int falling_ratio(long n, long k) {
  Int r = 1;
  for (long i = k + 1; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// Pivot-size heuristic: bit length of numerator plus denominator.
inline std::size_t rat_complexity(const Rat& r) {
  return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace sjp
