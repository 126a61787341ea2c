#pragma once

// Dense univariate polynomials over the rationals.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numlab/bigint.hpp"

namespace numlab::numbers {

/// Coefficients low degree first; trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients and equality is structural.
class UniPolynomial {
 public:
  UniPolynomial() = default;
  explicit UniPolynomial(std::vector<Rational> coeffs);
  UniPolynomial(std::initializer_list<long> coeffs);

  static UniPolynomial constant(const Rational& c);
  static UniPolynomial monomial(const Rational& c, std::size_t degree);
  static UniPolynomial x() { return monomial(1, 1); }

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  /// Zero for the zero polynomial.
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  bool has_integer_coefficients() const;

  Rational eval(const Rational& at) const;
  UniPolynomial monic() const;

  UniPolynomial operator+(const UniPolynomial& o) const;
  UniPolynomial operator-(const UniPolynomial& o) const;
  UniPolynomial operator*(const UniPolynomial& o) const;
  UniPolynomial operator*(const Rational& k) const;
  UniPolynomial operator-() const;
  bool operator==(const UniPolynomial& o) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; DomainError when `b` is zero.
std::pair<UniPolynomial, UniPolynomial> divmod(const UniPolynomial& a, const UniPolynomial& b);

/// p = content * primitive, where `primitive` has coprime integer
/// coefficients and a positive leading coefficient. Zero maps to (0, 0).
struct ContentSplit {
  Rational content;
  UniPolynomial primitive;
};
ContentSplit content_primitive(const UniPolynomial& p);

/// Monic gcd; gcd(0, 0) = 0.
UniPolynomial poly_gcd(const UniPolynomial& a, const UniPolynomial& b);
UniPolynomial derivative(const UniPolynomial& p);
/// Monic product of the distinct irreducible factors of p. DomainError on zero.
UniPolynomial squarefree_part(const UniPolynomial& p);
/// Res(a, b) by the Euclidean recurrence; both nonzero.
Rational resultant(const UniPolynomial& a, const UniPolynomial& b);

/// Polynomial text in the single variable x, e.g. "x^4 - x - 1"; the
/// Diophantine grammar applies. ParseError::where() is a character offset.
UniPolynomial parse_unipoly(std::string_view text);
/// Highest degree first, e.g. "x^3 - 3*x - 1" or "1/2*x + 3".
std::string render(const UniPolynomial& p);

/// Number of distinct real roots in (lo, hi] by a Sturm sequence.
std::size_t sturm_count(const UniPolynomial& p, const Rational& lo, const Rational& hi);
/// Number of distinct real roots.
std::size_t real_root_count(const UniPolynomial& p);
/// An interval (lo, hi] of width at most `width` containing exactly the k-th
/// (0-based, increasing) distinct real root.
std::pair<Rational, Rational> isolate_real_root(const UniPolynomial& p, std::size_t k, const Rational& width);

}  // namespace numlab::numbers
