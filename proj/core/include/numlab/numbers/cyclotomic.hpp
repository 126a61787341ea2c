#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n), elements stored on the
// power basis 1, zeta, ..., zeta^(phi(n)-1) of Q[x]/(Phi_n).

#include <string>
#include <vector>

#include "numlab/errors.hpp"
#include "numlab/numbers/unipoly.hpp"

namespace numlab::numbers {

inline constexpr unsigned kMaxCyclotomicIndex = 200;
inline constexpr unsigned kMaxGaussPrime = 100;
inline constexpr unsigned kMaxSqrtRadicand = 100;
inline constexpr unsigned kMaxEvalDigits = 50;

unsigned euler_phi(unsigned n);

/// Phi_n as (x^n - 1) / prod of Phi_d over proper divisors d.
/// GuardViolation outside 1..kMaxCyclotomicIndex.
UniPolynomial cyclotomic_polynomial(unsigned n);

/// Operands of a binary operation live in different fields.
class ModulusMismatch : public DomainError {
 public:
  ModulusMismatch(unsigned a, unsigned b);
};

class CyclotomicElement {
 public:
  /// std::invalid_argument unless coords.size() == euler_phi(modulus).
  CyclotomicElement(unsigned modulus, std::vector<Rational> coords);

  static CyclotomicElement zero(unsigned modulus);
  static CyclotomicElement embed_rational(unsigned modulus, const Rational& q);
  /// zeta_n^k for any integer k.
  static CyclotomicElement zeta_power(unsigned modulus, long k);
  /// Reduces an arbitrary polynomial in zeta modulo Phi_n.
  static CyclotomicElement power_basis_reduce(unsigned modulus, const UniPolynomial& in_zeta);

  unsigned modulus() const noexcept { return n_; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  UniPolynomial as_polynomial() const { return UniPolynomial(coords_); }
  bool is_rational() const;

  bool operator==(const CyclotomicElement& o) const = default;

 private:
  unsigned n_;
  std::vector<Rational> coords_;
};

CyclotomicElement cyc_add(const CyclotomicElement& a, const CyclotomicElement& b);
CyclotomicElement cyc_sub(const CyclotomicElement& a, const CyclotomicElement& b);
CyclotomicElement cyc_multiply(const CyclotomicElement& a, const CyclotomicElement& b);
CyclotomicElement cyc_scale(const CyclotomicElement& a, const Rational& k);
/// Structural equality; ModulusMismatch across fields.
bool cyc_equals(const CyclotomicElement& a, const CyclotomicElement& b);

/// Same number in Q(zeta_m); std::invalid_argument unless n divides m.
CyclotomicElement change_modulus(const CyclotomicElement& a, unsigned m);

/// "c0 + c1*z + ..." over the power basis, z standing for zeta_n.
std::string render(const CyclotomicElement& e);

/// sum over j in 1..p-1 of (j|p) zeta_p^j; its square (+p or -p by p mod 4)
/// is checked before returning. DomainError unless p is an odd prime;
/// GuardViolation above kMaxGaussPrime.
CyclotomicElement quadratic_gauss_sum(unsigned p);

/// The positive square root of a squarefree n as an element of Q(zeta_m),
/// assembled from Gauss sums, i = zeta_4 and sqrt(2) = zeta_8 + zeta_8^7.
/// m is the product of the odd primes of n, times 8 when n is even, else
/// times 4 when an odd number of them are 3 mod 4. The square is checked.
CyclotomicElement sqrt_as_cyclotomic(unsigned n);

/// Decimal rendering of e at zeta_n = exp(2 pi i / n), with a bound on the
/// distance between the printed value and the true one in each component.
struct NumericValue {
  std::string real;
  std::string imag;
  std::string error_bound;
  double real_approx = 0;
  double imag_approx = 0;
  double bound_approx = 0;
};

/// GuardViolation unless 1 <= digits <= kMaxEvalDigits.
NumericValue numeric_eval(const CyclotomicElement& e, unsigned digits);

}  // namespace numlab::numbers
