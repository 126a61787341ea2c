#include "numlab/numbers/factor.hpp"

#include <algorithm>
#include <optional>

#include "numlab/errors.hpp"

namespace numlab::numbers {

namespace {

// Exhaustive search runs in native integers; coefficients past this
// magnitude are refused rather than silently slow.
constexpr long kMaxSearchCoefficient = 1L << 40;

std::vector<BigInt> positive_divisors(BigInt n) {
  n = abs(n);
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

BigInt integer_coeff(const UniPolynomial& p, std::size_t i) { return p.coeff(i).get_num(); }

bool poly_less(const UniPolynomial& a, const UniPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

long to_long(const BigInt& v) { return v.get_si(); }

// Exact quotient f / g over the integers, if it exists.
std::optional<UniPolynomial> exact_quotient(const UniPolynomial& f, const UniPolynomial& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero() || !q.has_integer_coefficients()) return std::nullopt;
  return q;
}

// Irreducible factor of degree d of a primitive f with no factor of degree
// below d, or nullopt.
std::optional<UniPolynomial> find_factor(const UniPolynomial& f, unsigned d) {
  const BigInt lcf = integer_coeff(f, static_cast<std::size_t>(f.degree()));
  const BigInt f0 = integer_coeff(f, 0);

  BigInt sq = 0;
  for (const auto& c : f.coeffs()) sq += c.get_num() * c.get_num();
  BigInt norm = sqrt(sq);
  if (norm * norm < sq) ++norm;

  const long f_at_1 = to_long(f.eval(1).get_num());
  const long f_at_m1 = to_long(f.eval(-1).get_num());
  const long f_at_2 = to_long(f.eval(2).get_num());  // no rational roots remain, so all nonzero

  std::vector<BigInt> consts = positive_divisors(f0);
  for (const BigInt& lg : positive_divisors(lcf)) {
    // Mignotte: |g_j| <= C(d, j) * M(g) <= C(d, j) * lc(g) * ||f||_2 / |lc(f)|
    std::vector<long> bound(d + 1);
    for (unsigned j = 0; j <= d; ++j) {
      BigInt num = binomial(d, j) * lg * norm;
      BigInt den = abs(lcf);
      BigInt b = (num + den - 1) / den;
      if (b > kMaxSearchCoefficient) throw GuardViolation("factor search: coefficient bound too large");
      bound[j] = to_long(b);
    }
    for (const BigInt& c_abs : consts) {
      if (to_long(c_abs) > bound[0]) continue;
      for (int sign : {1, -1}) {
        std::vector<long> g(d + 1, 0);
        g[0] = sign * to_long(c_abs);
        g[d] = to_long(lg);
        for (unsigned j = 1; j < d; ++j) g[j] = -bound[j];
        for (;;) {
          __extension__ __int128 v1 = 0, vm1 = 0, v2 = 0, pw = 1;
          for (unsigned j = 0; j <= d; ++j) {
            v1 += g[j];
            vm1 += (j % 2 == 0) ? g[j] : -g[j];
            v2 += g[j] * pw;
            pw *= 2;
          }
          if (v1 != 0 && vm1 != 0 && v2 != 0 && f_at_1 % v1 == 0 && f_at_m1 % vm1 == 0 && f_at_2 % v2 == 0) {
            std::vector<Rational> gc(g.begin(), g.end());
            UniPolynomial cand(std::move(gc));
            if (exact_quotient(f, cand)) return cand;
          }
          unsigned j = 1;
          while (j < d && g[j] == bound[j]) {
            g[j] = -bound[j];
            ++j;
          }
          if (j >= d) break;
          ++g[j];
        }
      }
    }
  }
  return std::nullopt;
}

void check_search_range(const UniPolynomial& f) {
  for (const auto& c : f.coeffs())
    if (abs(c.get_num()) > kMaxSearchCoefficient) throw GuardViolation("factor search: coefficient too large");
}

}  // namespace

UniPolynomial Factorization::product() const {
  UniPolynomial acc = UniPolynomial::constant(unit);
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

std::vector<Rational> rational_roots(const UniPolynomial& p) {
  if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
  UniPolynomial f = content_primitive(p).primitive;
  std::vector<Rational> roots;
  if (sgn(f.coeff(0)) == 0) {
    roots.emplace_back(0);
    std::size_t k = 0;
    while (sgn(f.coeff(k)) == 0) ++k;
    f = UniPolynomial(std::vector<Rational>(f.coeffs().begin() + static_cast<long>(k), f.coeffs().end()));
  }
  if (f.degree() >= 1) {
    const auto nums = positive_divisors(integer_coeff(f, 0));
    const auto dens = positive_divisors(integer_coeff(f, static_cast<std::size_t>(f.degree())));
    for (const auto& a : nums)
      for (const auto& b : dens)
        for (int s : {1, -1}) {
          Rational r(s * a, b);
          r.canonicalize();
          if (sgn(f.eval(r)) == 0) roots.push_back(r);
        }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Factorization factor_integer_poly(const UniPolynomial& p) {
  if (p.is_zero()) throw DomainError("factorization of the zero polynomial");
  if (p.degree() > kMaxFactorDegree)
    throw GuardViolation("factor_integer_poly: degree at most " + std::to_string(kMaxFactorDegree));
  auto [unit, f] = content_primitive(p);
  check_search_range(f);
  Factorization out{unit, {}};

  for (const Rational& r : rational_roots(f)) {
    const UniPolynomial lin = content_primitive(UniPolynomial::x() - UniPolynomial::constant(r)).primitive;
    while (f.degree() >= 1) {
      auto q = exact_quotient(f, lin);
      if (!q) break;
      f = std::move(*q);
      out.factors.push_back(lin);
    }
  }
  unsigned d = 2;
  while (f.degree() >= 2 * static_cast<int>(d)) {
    if (auto g = find_factor(f, d)) {
      f = *exact_quotient(f, *g);
      out.factors.push_back(std::move(*g));
    } else {
      ++d;
    }
  }
  if (f.degree() >= 1) out.factors.push_back(f);
  std::sort(out.factors.begin(), out.factors.end(), poly_less);
  if (!(out.product() == p)) throw std::logic_error("factorization does not reconstruct its input");
  return out;
}

bool is_irreducible(const UniPolynomial& p) {
  if (p.degree() < 1) return false;
  return factor_integer_poly(p).factors.size() == 1;
}

}  // namespace numlab::numbers
