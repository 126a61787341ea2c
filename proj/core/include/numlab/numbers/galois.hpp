#pragma once

// Symmetry groups of algebraic numbers: the Galois group of the splitting
// field of the minimal polynomial, identified for degree at most 4.

#include <cstddef>
#include <string>
#include <string_view>

#include "numlab/numbers/unipoly.hpp"

namespace numlab::numbers {

/// Discriminant of p, normalized as (-1)^(n(n-1)/2) Res(p, p') / lc(p).
/// DomainError for degree < 1.
Rational discriminant(const UniPolynomial& p);

/// True when q is the square of a rational.
bool is_rational_square(const Rational& q);

/// The nine transitive groups of degree at most 4.
enum class GroupName { C1, C2, C3, S3, C4, V4, D4, A4, S4 };

std::string_view group_name(GroupName g);

struct SymmetryProfile {
  GroupName group = GroupName::C1;
  unsigned order = 1;
  bool abelian = true;
  bool solvable = true;
  bool two_group = true;  // order is a power of 2

  bool operator==(const SymmetryProfile&) const = default;
};

SymmetryProfile profile_of(GroupName g);

inline constexpr int kMaxGaloisDegree = 4;

/// For a monic quartic x^4 + a x^3 + b x^2 + c x + d:
///   y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2).
/// Non-monic input is made monic first; DomainError unless degree 4.
UniPolynomial resolvent_cubic(const UniPolynomial& quartic);

/// DomainError when p is not irreducible; GuardViolation outside degree 1..4.
SymmetryProfile galois_group(const UniPolynomial& p);

/// Real algebraic number: the root_index-th real root (increasing) of an
/// irreducible primitive integer polynomial with positive leading coefficient.
class AlgebraicNumber {
 public:
  /// Normalizes `poly` by its content. DomainError when it is not
  /// irreducible or has too few real roots.
  AlgebraicNumber(const UniPolynomial& poly, std::size_t root_index);

  const UniPolynomial& min_poly() const noexcept { return min_poly_; }
  std::size_t root_index() const noexcept { return root_index_; }
  /// Interval (lo, hi] of width at most `width` isolating this root.
  std::pair<Rational, Rational> enclosure(const Rational& width) const;

 private:
  UniPolynomial min_poly_;
  std::size_t root_index_;
};

struct SymmetryVerdicts {
  SymmetryProfile profile;
  bool constructible = false;        // ruler and compass
  bool radical_expressible = false;  // nested radicals
  bool finite_fourier = false;       // rational combination of roots of unity
};

/// Verdicts implied by a group: constructible iff the order is a power of 2,
/// radicals iff solvable, finite Fourier series iff abelian.
SymmetryVerdicts verdicts_for(const SymmetryProfile& profile);

/// GuardViolation when the minimal polynomial has degree above 4.
SymmetryVerdicts symmetry_profile(const AlgebraicNumber& a);

/// `group=S3 order=6 constructible=false radical=true fourier=false`
std::string render(const SymmetryVerdicts& v);

}  // namespace numlab::numbers
