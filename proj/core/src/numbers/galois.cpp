#include "numlab/numbers/galois.hpp"

#include <sstream>
#include <stdexcept>

#include "numlab/errors.hpp"
#include "numlab/numbers/factor.hpp"

namespace numlab::numbers {

Rational discriminant(const UniPolynomial& p) {
  const int n = p.degree();
  if (n < 1) throw DomainError("discriminant needs degree at least 1");
  Rational d = resultant(p, derivative(p)) / p.leading();
  if ((n * (n - 1) / 2) % 2 != 0) d = -d;
  return d;
}

bool is_rational_square(const Rational& q) {
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

std::string_view group_name(GroupName g) {
  switch (g) {
    case GroupName::C1: return "C1";
    case GroupName::C2: return "C2";
    case GroupName::C3: return "C3";
    case GroupName::S3: return "S3";
    case GroupName::C4: return "C4";
    case GroupName::V4: return "V4";
    case GroupName::D4: return "D4";
    case GroupName::A4: return "A4";
    case GroupName::S4: return "S4";
  }
  return "?";
}

SymmetryProfile profile_of(GroupName g) {
  auto make = [g](unsigned order, bool abelian) {
    // every group here is solvable
    return SymmetryProfile{g, order, abelian, true, (order & (order - 1)) == 0};
  };
  switch (g) {
    case GroupName::C1: return make(1, true);
    case GroupName::C2: return make(2, true);
    case GroupName::C3: return make(3, true);
    case GroupName::S3: return make(6, false);
    case GroupName::C4: return make(4, true);
    case GroupName::V4: return make(4, true);
    case GroupName::D4: return make(8, false);
    case GroupName::A4: return make(12, false);
    case GroupName::S4: return make(24, false);
  }
  throw std::logic_error("unknown group");
}

UniPolynomial resolvent_cubic(const UniPolynomial& quartic) {
  if (quartic.degree() != 4) throw DomainError("resolvent cubic needs a quartic");
  const UniPolynomial m = quartic.monic();
  const Rational a = m.coeff(3), b = m.coeff(2), c = m.coeff(1), d = m.coeff(0);
  return UniPolynomial(std::vector<Rational>{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1});
}

namespace {

// A rational q is a square in Q(sqrt(delta)), delta not a rational square.
bool square_in_quadratic_field(const Rational& q, const Rational& delta) {
  return sgn(q) == 0 || is_rational_square(q) || is_rational_square(q * delta);
}

// x^2 + u x + v splits over Q(sqrt(delta)).
bool quadratic_splits_over(const Rational& u, const Rational& v, const Rational& delta) {
  return square_in_quadratic_field(u * u - 4 * v, delta);
}

void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(what);
}

GroupName quartic_group(const UniPolynomial& p) {
  const UniPolynomial m = p.monic();
  const Rational a = m.coeff(3), b = m.coeff(2), d = m.coeff(0);
  const Rational delta = discriminant(m);
  const bool square = is_rational_square(delta);
  const auto roots = rational_roots(resolvent_cubic(m));
  // The resolvent shares the discriminant, hence is squarefree: either no,
  // one or three rational roots.
  if (roots.empty()) return square ? GroupName::A4 : GroupName::S4;
  if (roots.size() == 3) {
    require(square, "V4 branch with non-square discriminant");
    return GroupName::V4;
  }
  require(roots.size() == 1, "resolvent cubic with exactly two rational roots");
  require(!square, "C4/D4 branch with square discriminant");
  const Rational& r = roots.front();
  const bool cyclic = quadratic_splits_over(-r, d, delta) && quadratic_splits_over(a, b - r, delta);
  return cyclic ? GroupName::C4 : GroupName::D4;
}

}  // namespace

SymmetryProfile galois_group(const UniPolynomial& p) {
  const int n = p.degree();
  if (n < 1 || n > kMaxGaloisDegree)
    throw GuardViolation("galois_group: degree must lie in 1.." + std::to_string(kMaxGaloisDegree));
  if (!is_irreducible(p)) throw DomainError("galois_group: polynomial is not irreducible: " + render(p));
  switch (n) {
    case 1: return profile_of(GroupName::C1);
    case 2: return profile_of(GroupName::C2);
    case 3: return profile_of(is_rational_square(discriminant(p)) ? GroupName::C3 : GroupName::S3);
    default: return profile_of(quartic_group(p));
  }
}

AlgebraicNumber::AlgebraicNumber(const UniPolynomial& poly, std::size_t root_index)
    : min_poly_(content_primitive(poly).primitive), root_index_(root_index) {
  if (!is_irreducible(min_poly_)) throw DomainError("minimal polynomial must be irreducible: " + render(poly));
  const std::size_t real = real_root_count(min_poly_);
  if (root_index_ >= real)
    throw DomainError("root index " + std::to_string(root_index_) + " but only " + std::to_string(real) +
                      " real roots");
}

std::pair<Rational, Rational> AlgebraicNumber::enclosure(const Rational& width) const {
  return isolate_real_root(min_poly_, root_index_, width);
}

SymmetryVerdicts symmetry_profile(const AlgebraicNumber& a) {
  if (a.min_poly().degree() > kMaxGaloisDegree)
    throw GuardViolation("symmetry_profile: degree at most " + std::to_string(kMaxGaloisDegree));
  return verdicts_for(galois_group(a.min_poly()));
}

SymmetryVerdicts verdicts_for(const SymmetryProfile& profile) {
  SymmetryVerdicts v;
  v.profile = profile;
  v.constructible = v.profile.two_group;
  v.radical_expressible = v.profile.solvable;
  v.finite_fourier = v.profile.abelian;
  return v;
}

std::string render(const SymmetryVerdicts& v) {
  std::ostringstream os;
  os << std::boolalpha << "group=" << group_name(v.profile.group) << " order=" << v.profile.order
     << " constructible=" << v.constructible << " radical=" << v.radical_expressible
     << " fourier=" << v.finite_fourier;
  return os.str();
}

}  // namespace numlab::numbers
