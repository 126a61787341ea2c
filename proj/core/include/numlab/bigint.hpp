#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace numlab {

/// Arbitrary-precision integer.
using BigInt = mpz_class;
/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
  Rational c = v;
  c.canonicalize();
  return c.get_str();
}

inline BigInt from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

/// True when `v` is a non-negative value representable as std::uint64_t.
inline bool fits_u64(const BigInt& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& v) {
  std::uint64_t out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(out), 0, 0, v.get_mpz_t());
  return count == 0 ? 0 : out;
}

}  // namespace numlab
