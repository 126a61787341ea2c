#pragma once

// Factorization over the rationals for small degree: rational-root
// extraction, then exhaustive search for integer factors whose coefficients
// lie inside the Mignotte bound.

#include <vector>

#include "numlab/numbers/unipoly.hpp"

namespace numlab::numbers {

inline constexpr int kMaxFactorDegree = 8;

/// p = unit * product(factors). Each factor is a primitive integer
/// polynomial with positive leading coefficient, listed once per
/// multiplicity, ordered by degree then by coefficients.
struct Factorization {
  Rational unit;
  std::vector<UniPolynomial> factors;

  UniPolynomial product() const;
};

/// DomainError on the zero polynomial; GuardViolation above kMaxFactorDegree.
/// Rational coefficients are accepted and absorbed into `unit`.
Factorization factor_integer_poly(const UniPolynomial& p);

/// Degree >= 1 and no nontrivial factorization over the rationals.
bool is_irreducible(const UniPolynomial& p);

/// Rational roots of p, increasing, without multiplicity.
std::vector<Rational> rational_roots(const UniPolynomial& p);

}  // namespace numlab::numbers
