#include "numlab/numbers/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace numlab::numbers {

namespace {

bool is_small_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Legendre symbol (j|p) for an odd prime p by Euler's criterion.
int legendre(unsigned j, unsigned p) {
  j %= p;
  if (j == 0) return 0;
  unsigned long r = 1, b = j, e = (p - 1) / 2;
  while (e) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r == 1 ? 1 : -1;
}

const UniPolynomial& cached_cyclotomic(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, UniPolynomial> cache;
  std::lock_guard lock(mu);
  auto compute = [&](auto& self, unsigned k) -> const UniPolynomial& {
    if (auto it = cache.find(k); it != cache.end()) return it->second;
    UniPolynomial acc = UniPolynomial::monomial(1, k) - UniPolynomial::constant(1);
    for (unsigned d = 1; d < k; ++d)
      if (k % d == 0) acc = divmod(acc, self(self, d)).first;
    return cache.emplace(k, std::move(acc)).first->second;
  };
  return compute(compute, n);
}

void require_same_field(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.modulus() != b.modulus()) throw ModulusMismatch(a.modulus(), b.modulus());
}

void check_modulus(unsigned n) {
  if (n < 1 || n > kMaxCyclotomicIndex)
    throw GuardViolation("cyclotomic modulus must lie in 1.." + std::to_string(kMaxCyclotomicIndex));
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n, m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

UniPolynomial cyclotomic_polynomial(unsigned n) {
  check_modulus(n);
  return cached_cyclotomic(n);
}

ModulusMismatch::ModulusMismatch(unsigned a, unsigned b)
    : DomainError("cyclotomic modulus mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}

CyclotomicElement::CyclotomicElement(unsigned modulus, std::vector<Rational> coords)
    : n_(modulus), coords_(std::move(coords)) {
  check_modulus(n_);
  if (coords_.size() != euler_phi(n_))
    throw std::invalid_argument("cyclotomic element needs phi(n) = " + std::to_string(euler_phi(n_)) +
                                " coordinates");
  for (auto& c : coords_) c.canonicalize();
}

CyclotomicElement CyclotomicElement::zero(unsigned modulus) {
  check_modulus(modulus);
  return {modulus, std::vector<Rational>(euler_phi(modulus), Rational(0))};
}

CyclotomicElement CyclotomicElement::embed_rational(unsigned modulus, const Rational& q) {
  CyclotomicElement e = zero(modulus);
  e.coords_[0] = q;
  e.coords_[0].canonicalize();
  return e;
}

CyclotomicElement CyclotomicElement::zeta_power(unsigned modulus, long k) {
  check_modulus(modulus);
  const long n = modulus;
  const auto e = static_cast<std::size_t>(((k % n) + n) % n);
  return power_basis_reduce(modulus, UniPolynomial::monomial(1, e));
}

CyclotomicElement CyclotomicElement::power_basis_reduce(unsigned modulus, const UniPolynomial& in_zeta) {
  check_modulus(modulus);
  const UniPolynomial r = divmod(in_zeta, cached_cyclotomic(modulus)).second;
  std::vector<Rational> c = r.coeffs();
  c.resize(euler_phi(modulus), Rational(0));
  return {modulus, std::move(c)};
}

bool CyclotomicElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

CyclotomicElement cyc_add(const CyclotomicElement& a, const CyclotomicElement& b) {
  require_same_field(a, b);
  std::vector<Rational> c = a.coords();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
  return {a.modulus(), std::move(c)};
}

CyclotomicElement cyc_scale(const CyclotomicElement& a, const Rational& k) {
  std::vector<Rational> c = a.coords();
  for (auto& x : c) x *= k;
  return {a.modulus(), std::move(c)};
}

CyclotomicElement cyc_sub(const CyclotomicElement& a, const CyclotomicElement& b) {
  return cyc_add(a, cyc_scale(b, -1));
}

CyclotomicElement cyc_multiply(const CyclotomicElement& a, const CyclotomicElement& b) {
  require_same_field(a, b);
  return CyclotomicElement::power_basis_reduce(a.modulus(), a.as_polynomial() * b.as_polynomial());
}

bool cyc_equals(const CyclotomicElement& a, const CyclotomicElement& b) {
  require_same_field(a, b);
  return a == b;
}

CyclotomicElement change_modulus(const CyclotomicElement& a, unsigned m) {
  check_modulus(m);
  if (m % a.modulus() != 0)
    throw std::invalid_argument("change_modulus: " + std::to_string(a.modulus()) + " does not divide " +
                                std::to_string(m));
  const std::size_t step = m / a.modulus();
  std::vector<Rational> spread((a.coords().size() - 1) * step + 1, Rational(0));
  for (std::size_t k = 0; k < a.coords().size(); ++k) spread[k * step] = a.coords()[k];
  return CyclotomicElement::power_basis_reduce(m, UniPolynomial(std::move(spread)));
}

std::string render(const CyclotomicElement& e) {
  std::string s = render(e.as_polynomial());
  std::replace(s.begin(), s.end(), 'x', 'z');
  return s;
}

CyclotomicElement quadratic_gauss_sum(unsigned p) {
  if (p > kMaxGaussPrime) throw GuardViolation("quadratic_gauss_sum: p at most " + std::to_string(kMaxGaussPrime));
  if (p == 2 || !is_small_prime(p)) throw DomainError("quadratic_gauss_sum: " + std::to_string(p) + " is not an odd prime");
  std::vector<Rational> raw(p, Rational(0));
  for (unsigned j = 1; j < p; ++j) raw[j] = legendre(j, p);
  CyclotomicElement g = CyclotomicElement::power_basis_reduce(p, UniPolynomial(std::move(raw)));
  const long sign = p % 4 == 1 ? 1 : -1;
  if (!(cyc_multiply(g, g) == CyclotomicElement::embed_rational(p, sign * static_cast<long>(p))))
    throw std::logic_error("Gauss sum failed its square check");
  return g;
}

CyclotomicElement sqrt_as_cyclotomic(unsigned n) {
  if (n < 1 || n > kMaxSqrtRadicand)
    throw GuardViolation("sqrt_as_cyclotomic: n must lie in 1.." + std::to_string(kMaxSqrtRadicand));
  std::vector<unsigned> odd_primes;
  bool even = false;
  unsigned m = n;
  for (unsigned p = 2; p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) throw DomainError("sqrt_as_cyclotomic: " + std::to_string(n) + " is not squarefree");
    if (p == 2) even = true;
    else odd_primes.push_back(p);
  }
  const auto k3 = static_cast<unsigned>(
      std::count_if(odd_primes.begin(), odd_primes.end(), [](unsigned p) { return p % 4 == 3; }));
  unsigned modulus = 1;
  for (unsigned p : odd_primes) modulus *= p;
  if (even) modulus *= 8;
  else if (k3 % 2 == 1) modulus *= 4;

  // sqrt(p) = g_p for p = 1 mod 4 and -i g_p for p = 3 mod 4, so the product
  // carries (-i)^k3 = (-1)^(k3/2) when k3 is even, else (-1)^((k3-1)/2) (-i).
  CyclotomicElement acc = CyclotomicElement::embed_rational(modulus, (k3 / 2) % 2 == 0 ? 1 : -1);
  for (unsigned p : odd_primes) acc = cyc_multiply(acc, change_modulus(quadratic_gauss_sum(p), modulus));
  if (k3 % 2 == 1)
    acc = cyc_multiply(acc, cyc_scale(change_modulus(CyclotomicElement::zeta_power(4, 1), modulus), -1));
  if (even) {
    const CyclotomicElement root2 =
        cyc_add(CyclotomicElement::zeta_power(8, 1), CyclotomicElement::zeta_power(8, 7));
    acc = cyc_multiply(acc, change_modulus(root2, modulus));
  }
  if (!(cyc_multiply(acc, acc) == CyclotomicElement::embed_rational(modulus, static_cast<long>(n))))
    throw std::logic_error("square root failed its square check");
  return acc;
}

namespace {

// RAII wrapper for an mpfr_t at a fixed precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

std::string format_fixed(mpfr_ptr x, unsigned digits) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", static_cast<int>(digits), x);
  std::string s(buf);
  mpfr_free_str(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

}  // namespace

NumericValue numeric_eval(const CyclotomicElement& e, unsigned digits) {
  if (digits < 1 || digits > kMaxEvalDigits)
    throw GuardViolation("numeric_eval: digits must lie in 1.." + std::to_string(kMaxEvalDigits));
  // Working precision: 20 guard digits past the requested ones.
  const auto prec = static_cast<mpfr_prec_t>((digits + 20) * 3.33) + 16;
  Real pi(prec), angle(prec), c(prec), s(prec), coeff(prec), term(prec), re(prec), im(prec), abs_sum(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);

  const unsigned n = e.modulus();
  for (std::size_t k = 0; k < e.coords().size(); ++k) {
    const Rational& q = e.coords()[k];
    if (sgn(q) == 0) continue;
    mpfr_mul_ui(angle.get(), pi.get(), 2 * static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_div_ui(angle.get(), angle.get(), n, MPFR_RNDN);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    mpfr_set_q(coeff.get(), q.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term.get(), coeff.get(), c.get(), MPFR_RNDN);
    mpfr_add(re.get(), re.get(), term.get(), MPFR_RNDN);
    mpfr_mul(term.get(), coeff.get(), s.get(), MPFR_RNDN);
    mpfr_add(im.get(), im.get(), term.get(), MPFR_RNDN);
    mpfr_abs(term.get(), coeff.get(), MPFR_RNDU);
    mpfr_add(abs_sum.get(), abs_sum.get(), term.get(), MPFR_RNDU);
  }

  // Each term carries at most 40 units of relative rounding in the angle,
  // the sine/cosine and the product; each addition one more. Printing to
  // `digits` places adds half a unit in the last place.
  Real bound(prec), ulp(prec);
  mpfr_set_ui(ulp.get(), 1, MPFR_RNDU);
  mpfr_div_2si(ulp.get(), ulp.get(), prec, MPFR_RNDU);
  mpfr_add_ui(bound.get(), abs_sum.get(), 1, MPFR_RNDU);
  mpfr_mul_ui(bound.get(), bound.get(), 40 + static_cast<unsigned long>(e.coords().size()), MPFR_RNDU);
  mpfr_mul(bound.get(), bound.get(), ulp.get(), MPFR_RNDU);
  Real half_place(prec);
  mpfr_set_ui(half_place.get(), 10, MPFR_RNDU);
  mpfr_pow_si(half_place.get(), half_place.get(), -static_cast<long>(digits), MPFR_RNDU);
  mpfr_div_2ui(half_place.get(), half_place.get(), 1, MPFR_RNDU);
  mpfr_add(bound.get(), bound.get(), half_place.get(), MPFR_RNDU);

  NumericValue out;
  out.real = format_fixed(re.get(), digits);
  out.imag = format_fixed(im.get(), digits);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.2RUe", bound.get());
  out.error_bound = buf;
  mpfr_free_str(buf);
  out.real_approx = mpfr_get_d(re.get(), MPFR_RNDN);
  out.imag_approx = mpfr_get_d(im.get(), MPFR_RNDN);
  out.bound_approx = mpfr_get_d(bound.get(), MPFR_RNDU);
  return out;
}

}  // namespace numlab::numbers
