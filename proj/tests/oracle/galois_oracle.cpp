#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "oracles.hpp"

namespace numlab::oracle {

namespace {

using Real = boost::multiprecision::cpp_bin_float_100;

struct Cx {
  Real re, im;
};
Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator/(const Cx& a, const Cx& b) {
  const Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real abs2(const Cx& a) { return a.re * a.re + a.im * a.im; }

Real to_real(const Rational& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

// Durand-Kerner on the monic normalization.
std::vector<Cx> roots(const numbers::UniPolynomial& p) {
  const int n = p.degree();
  std::vector<Real> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = to_real(p.coeff(i) / p.leading());
  auto eval = [&](const Cx& z) {
    Cx acc{Real(1), Real(0)};
    for (int i = n - 1; i >= 0; --i) acc = acc * z + Cx{c[i], Real(0)};
    return acc;
  };
  std::vector<Cx> z(n);
  Cx seed{Real("0.4"), Real("0.9")}, w{Real(1), Real(0)};
  for (int i = 0; i < n; ++i) z[i] = w = w * seed;
  for (int iter = 0; iter < 2000; ++iter) {
    Real moved = 0;
    for (int i = 0; i < n; ++i) {
      Cx den{Real(1), Real(0)};
      for (int j = 0; j < n; ++j)
        if (j != i) den = den * (z[i] - z[j]);
      const Cx step = eval(z[i]) / den;
      z[i] = z[i] - step;
      moved = std::max(moved, abs2(step));
    }
    if (moved < Real("1e-180")) break;
  }
  return z;
}

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

std::set<Perm> closure(const std::vector<Perm>& gens, int n) {
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> group{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Perm h = compose(s, g);
        if (group.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return group;
}

// Every subgroup of S_n, n <= 4, is generated by at most two elements.
std::vector<std::set<Perm>> subgroups(int n) {
  std::vector<Perm> all;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::set<std::set<Perm>> found;
  for (const auto& a : all)
    for (const auto& b : all) found.insert(closure({a, b}, n));
  std::vector<std::set<Perm>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return out;
}

bool near_integer(const Cx& z, const Real& scale) {
  const Real tol = Real("1e-40") * std::max(Real(1), scale);
  return abs(z.im) < tol && abs(z.re - round(z.re)) < tol;
}

}  // namespace

SplittingInfo splitting_degree(const numbers::UniPolynomial& p) {
  const int n = p.degree();
  if (n < 1 || n > 4 || !p.has_integer_coefficients()) throw std::invalid_argument("oracle: degree 1..4, integral");
  if (n == 1) return {1, true, true};
  // a * root is an algebraic integer
  const Real lead = to_real(p.leading());
  std::vector<Cx> r = roots(p);
  for (auto& z : r) z = z * Cx{lead, Real(0)};

  const std::vector<std::vector<int>> weights = {{1, 3, 9, 27}, {2, 7, 19, 53}, {5, 11, 23, 41}};
  for (const auto& c : weights) {
    auto theta = [&](const Perm& s) {
      Cx acc{Real(0), Real(0)};
      for (int i = 0; i < n; ++i) acc = acc + Cx{Real(c[i]), Real(0)} * r[s[i]];
      return acc;
    };
    // the conjugates of theta must be distinct
    std::vector<Cx> values;
    Perm s(n);
    std::iota(s.begin(), s.end(), 0);
    do values.push_back(theta(s));
    while (std::next_permutation(s.begin(), s.end()));
    bool distinct = true;
    for (std::size_t i = 0; i < values.size() && distinct; ++i)
      for (std::size_t j = i + 1; j < values.size(); ++j)
        if (abs2(values[i] - values[j]) < Real("1e-60")) distinct = false;
    if (!distinct) continue;

    for (const auto& h : subgroups(n)) {
      std::vector<Cx> poly{{Real(1), Real(0)}};  // low degree first
      Real scale = 1;
      for (const auto& g : h) {
        const Cx t = theta(g);
        scale *= 1 + sqrt(abs2(t));
        std::vector<Cx> next(poly.size() + 1, Cx{Real(0), Real(0)});
        for (std::size_t i = 0; i < poly.size(); ++i) {
          next[i + 1] = next[i + 1] + poly[i];
          next[i] = next[i] - poly[i] * t;
        }
        poly = std::move(next);
      }
      if (!std::all_of(poly.begin(), poly.end(), [&](const Cx& z) { return near_integer(z, scale); })) continue;
      SplittingInfo info;
      info.order = static_cast<unsigned>(h.size());
      info.abelian = true;
      for (const auto& a : h)
        for (const auto& b : h)
          if (compose(a, b) != compose(b, a)) info.abelian = false;
      for (const auto& g : h)
        if (closure({g}, n).size() == h.size()) info.cyclic = true;
      return info;
    }
  }
  throw std::runtime_error("oracle: no subgroup matched");
}

}  // namespace numlab::oracle
