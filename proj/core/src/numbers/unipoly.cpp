#include "numlab/numbers/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "numlab/dioph.hpp"
#include "numlab/errors.hpp"

namespace numlab::numbers {

UniPolynomial::UniPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

UniPolynomial::UniPolynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

UniPolynomial UniPolynomial::constant(const Rational& c) { return UniPolynomial(std::vector<Rational>{c}); }

UniPolynomial UniPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UniPolynomial(std::move(v));
}

void UniPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

bool UniPolynomial::has_integer_coefficients() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Rational UniPolynomial::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPolynomial UniPolynomial::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading());
}

UniPolynomial UniPolynomial::operator+(const UniPolynomial& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPolynomial(std::move(r));
}

UniPolynomial UniPolynomial::operator-(const UniPolynomial& o) const { return *this + (-o); }

UniPolynomial UniPolynomial::operator*(const UniPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPolynomial(std::move(r));
}

UniPolynomial UniPolynomial::operator*(const Rational& k) const {
  std::vector<Rational> r = c_;
  for (auto& c : r) c *= k;
  return UniPolynomial(std::move(r));
}

UniPolynomial UniPolynomial::operator-() const { return *this * Rational(-1); }

bool UniPolynomial::operator==(const UniPolynomial& o) const { return c_ == o.c_; }

std::pair<UniPolynomial, UniPolynomial> divmod(const UniPolynomial& a, const UniPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {UniPolynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1), Rational(0));
  const Rational lb = b.leading();
  for (int i = da; i >= db; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] / lb;
    if (sgn(q) == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPolynomial(std::move(quot)), UniPolynomial(std::move(rem))};
}

ContentSplit content_primitive(const UniPolynomial& p) {
  if (p.is_zero()) return {Rational(0), UniPolynomial{}};
  BigInt den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  BigInt num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    BigInt scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (sgn(p.leading()) < 0) content = -content;
  return {content, p * Rational(1 / content)};
}

UniPolynomial poly_gcd(const UniPolynomial& a, const UniPolynomial& b) {
  UniPolynomial x = a, y = b;
  while (!y.is_zero()) {
    UniPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPolynomial derivative(const UniPolynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> d(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) d[i - 1] = p.coeffs()[i] * static_cast<long>(i);
  return UniPolynomial(std::move(d));
}

UniPolynomial squarefree_part(const UniPolynomial& p) {
  if (p.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  return divmod(p, poly_gcd(p, derivative(p))).first.monic();
}

Rational resultant(const UniPolynomial& a, const UniPolynomial& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("resultant with the zero polynomial");
  // res(a, b) = (-1)^(mn) lc(b)^(m - deg r) res(b, r) with r = a mod b
  UniPolynomial f = a, g = b;
  Rational acc = 1;
  for (;;) {
    const int m = f.degree();
    const int n = g.degree();
    if (n == 0) {
      Rational p = 1;
      for (int i = 0; i < m; ++i) p *= g.leading();
      return acc * p;
    }
    UniPolynomial r = divmod(f, g).second;
    if (r.is_zero()) return 0;
    if ((m % 2 != 0) && (n % 2 != 0)) acc = -acc;
    for (int i = 0; i < m - r.degree(); ++i) acc *= g.leading();
    f = std::move(g);
    g = std::move(r);
  }
}

UniPolynomial parse_unipoly(std::string_view text) {
  const dioph::IntPolynomial p = dioph::poly_parse(text);
  for (const auto& v : p.variables())
    if (v != "x") throw ParseError("univariate polynomial in x expected, found variable '" + v + "'", 0);
  std::vector<Rational> c;
  for (const auto& [mono, coeff] : p.terms()) {
    const std::size_t d = mono.degree_in("x");
    if (c.size() <= d) c.resize(d + 1, Rational(0));
    c[d] += Rational(coeff);
  }
  return UniPolynomial(std::move(c));
}

std::string render(const UniPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    Rational c = p.coeffs()[i];
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    const bool unit = c == 1;
    if (i == 0 || !unit) os << c.get_str();
    if (i > 0) {
      if (!unit) os << '*';
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

namespace {

std::vector<UniPolynomial> sturm_sequence(const UniPolynomial& p) {
  std::vector<UniPolynomial> seq{p, derivative(p)};
  while (!seq.back().is_zero()) {
    UniPolynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
    seq.push_back(-r);
  }
  seq.pop_back();
  return seq;
}

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t variations_at(const std::vector<UniPolynomial>& seq, const Rational& at) {
  std::vector<int> signs;
  for (const auto& q : seq) signs.push_back(sgn(q.eval(at)));
  return sign_changes(signs);
}

// Every real root lies strictly inside (-B, B).
Rational cauchy_bound(const UniPolynomial& p) {
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i) m = std::max(m, Rational(abs(p.coeffs()[i] / p.leading())));
  return m + 1;
}

void require_nonconstant(const UniPolynomial& p) {
  if (p.degree() < 1) throw DomainError("real roots of a constant polynomial");
}

}  // namespace

std::size_t sturm_count(const UniPolynomial& p, const Rational& lo, const Rational& hi) {
  require_nonconstant(p);
  const auto seq = sturm_sequence(squarefree_part(p));
  const std::size_t a = variations_at(seq, lo);
  const std::size_t b = variations_at(seq, hi);
  return a > b ? a - b : 0;
}

std::size_t real_root_count(const UniPolynomial& p) {
  require_nonconstant(p);
  const Rational b = cauchy_bound(p);
  return sturm_count(p, -b, b);
}

std::pair<Rational, Rational> isolate_real_root(const UniPolynomial& p, std::size_t k, const Rational& width) {
  require_nonconstant(p);
  if (sgn(width) <= 0) throw std::invalid_argument("isolation width must be positive");
  const auto seq = sturm_sequence(squarefree_part(p));
  const Rational bound = cauchy_bound(p);
  Rational lo = -bound, hi = bound;
  const std::size_t total = variations_at(seq, lo) - variations_at(seq, hi);
  if (k >= total) throw DomainError("root index " + std::to_string(k) + " exceeds real root count");
  // invariant: exactly k roots lie in (-bound, lo]; root k lies in (lo, hi]
  const std::size_t v_start = variations_at(seq, -bound);
  while (true) {
    const std::size_t in = variations_at(seq, lo) - variations_at(seq, hi);
    if (in == 1 && hi - lo <= width) return {lo, hi};
    Rational mid = (lo + hi) / 2;
    const std::size_t left = v_start - variations_at(seq, mid);
    if (left > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
}

}  // namespace numlab::numbers
