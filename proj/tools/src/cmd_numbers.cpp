#include <algorithm>

#include "context.hpp"
#include "numlab/numbers/cyclotomic.hpp"
#include "numlab/numbers/factor.hpp"
#include "numlab/numbers/galois.hpp"

namespace numlab::cli {

namespace {

using numbers::CyclotomicElement;
using numbers::UniPolynomial;

std::string factorization_text(const numbers::Factorization& f) {
  std::string s = to_string(f.unit);
  for (const auto& g : f.factors) s += " * (" + numbers::render(g) + ")";
  return s;
}

nlohmann::ordered_json numeric_json(const numbers::NumericValue& v) {
  return {{"real", v.real}, {"imag", v.imag}, {"error_bound", v.error_bound}};
}

std::string numeric_text(const numbers::NumericValue& v) {
  std::string imag = v.imag;
  std::string sign = "+";
  if (!imag.empty() && imag[0] == '-') {
    sign = "-";
    imag.erase(0, 1);
  }
  return v.real + " " + sign + " " + imag + "i (error <= " + v.error_bound + ")";
}

// Element text uses z for zeta_n; the polynomial grammar wants x.
UniPolynomial parse_in_zeta(std::string text) {
  if (text.find('x') != std::string::npos) throw UsageError("write elements in z, the chosen root of unity");
  std::replace(text.begin(), text.end(), 'z', 'x');
  return numbers::parse_unipoly(text);
}

}  // namespace

void register_numbers(CLI::App& app, Context& ctx) {
  auto* numbers_cmd = app.add_subcommand("numbers", "Algebraic numbers and their symmetry");
  numbers_cmd->require_subcommand(1);

  struct SymArgs {
    std::string poly;
    std::optional<std::size_t> root;
  };
  auto sa = std::make_shared<SymArgs>();
  auto* symmetry = numbers_cmd->add_subcommand("symmetry", "Galois group and the verdicts it implies");
  symmetry->add_option("--poly", sa->poly, "Irreducible polynomial in x, degree 1..4")->required();
  symmetry->add_option("--root", sa->root, "Also isolate this real root (0-based, increasing)");
  add_json_flag(symmetry, ctx);
  symmetry->callback([&ctx, sa] {
    const UniPolynomial p = numbers::parse_unipoly(sa->poly);
    if (p.degree() > numbers::kMaxGaloisDegree)
      throw GuardViolation("numbers symmetry: degree at most " + std::to_string(numbers::kMaxGaloisDegree));
    if (p.degree() >= 1 && !numbers::is_irreducible(p))
      throw DomainError("not irreducible over Q: " + sa->poly + " = " +
                        factorization_text(numbers::factor_integer_poly(p)));
    numbers::SymmetryVerdicts v = numbers::verdicts_for(numbers::galois_group(p));
    std::optional<std::pair<Rational, Rational>> interval;
    if (sa->root) {
      const numbers::AlgebraicNumber a(p, *sa->root);
      v = numbers::symmetry_profile(a);
      interval = a.enclosure(Rational(1, 1000000));
    }
    const Rational disc = p.degree() >= 1 ? numbers::discriminant(p) : Rational(0);
    ctx.begin("numbers symmetry");
    if (ctx.json) {
      ctx.doc["polynomial"] = numbers::render(p);
      ctx.doc["discriminant"] = to_string(disc);
      ctx.doc["group"] = std::string(numbers::group_name(v.profile.group));
      ctx.doc["order"] = v.profile.order;
      ctx.doc["abelian"] = v.profile.abelian;
      ctx.doc["solvable"] = v.profile.solvable;
      ctx.doc["constructible"] = v.constructible;
      ctx.doc["radical"] = v.radical_expressible;
      ctx.doc["fourier"] = v.finite_fourier;
      if (interval) ctx.doc["root_enclosure"] = {to_string(interval->first), to_string(interval->second)};
      return;
    }
    ctx.out << numbers::render(v) << '\n';
    if (interval)
      ctx.out << "root " << *sa->root << " in (" << to_string(interval->first) << ", " << to_string(interval->second)
              << "]\n";
  });

  struct FourierArgs {
    unsigned n = 5;
    unsigned digits = 20;
  };
  auto fa = std::make_shared<FourierArgs>();
  auto* fourier = numbers_cmd->add_subcommand("fourier", "Square root of n as a sum of roots of unity");
  fourier->add_option("--sqrt", fa->n, "Squarefree radicand")->required();
  fourier->add_option("--digits", fa->digits, "Decimal digits of the numeric check")->capture_default_str();
  add_json_flag(fourier, ctx);
  fourier->callback([&ctx, fa] {
    const CyclotomicElement r = numbers::sqrt_as_cyclotomic(fa->n);
    const bool squares = numbers::cyc_equals(numbers::cyc_multiply(r, r),
                                             CyclotomicElement::embed_rational(r.modulus(), Rational(fa->n)));
    const auto value = numbers::numeric_eval(r, fa->digits);
    ctx.begin("numbers fourier");
    if (ctx.json) {
      ctx.doc["n"] = fa->n;
      ctx.doc["modulus"] = r.modulus();
      ctx.doc["element"] = numbers::render(r);
      ctx.doc["square_check"] = squares;
      ctx.doc["value"] = numeric_json(value);
      return;
    }
    ctx.out << "sqrt(" << fa->n << ") in Q(zeta_" << r.modulus() << ") = " << numbers::render(r) << '\n'
            << "square check: " << (squares ? "exact" : "FAILED") << '\n'
            << "value: " << numeric_text(value) << '\n';
  });

  struct GaussArgs {
    unsigned p = 5;
    unsigned digits = 20;
  };
  auto ga = std::make_shared<GaussArgs>();
  auto* gauss = numbers_cmd->add_subcommand("gauss", "Quadratic Gauss sum of an odd prime");
  gauss->add_option("--p", ga->p, "Odd prime")->required();
  gauss->add_option("--digits", ga->digits, "Decimal digits of the numeric value")->capture_default_str();
  add_json_flag(gauss, ctx);
  gauss->callback([&ctx, ga] {
    const CyclotomicElement g = numbers::quadratic_gauss_sum(ga->p);
    const CyclotomicElement sq = numbers::cyc_multiply(g, g);
    const auto value = numbers::numeric_eval(g, ga->digits);
    ctx.begin("numbers gauss");
    if (ctx.json) {
      ctx.doc["p"] = ga->p;
      ctx.doc["element"] = numbers::render(g);
      ctx.doc["square"] = numbers::render(sq);
      ctx.doc["value"] = numeric_json(value);
      return;
    }
    ctx.out << "g(" << ga->p << ") = " << numbers::render(g) << '\n'
            << "g^2 = " << numbers::render(sq) << '\n'
            << "value: " << numeric_text(value) << '\n';
  });

  struct CycArgs {
    unsigned n = 5;
    std::string element;
    std::string plus;
    unsigned digits = 20;
  };
  auto ca = std::make_shared<CycArgs>();
  auto* cyclotomic = numbers_cmd->add_subcommand("cyclotomic", "Cyclotomic polynomials and field elements");
  cyclotomic->add_option("--n", ca->n, "Index of the root of unity")->required();
  cyclotomic->add_option("--element", ca->element, "Polynomial in z to reduce modulo Phi_n");
  cyclotomic->add_option("--plus", ca->plus, "Polynomial in z added to the element");
  cyclotomic->add_option("--digits", ca->digits, "Decimal digits of the numeric value")->capture_default_str();
  add_json_flag(cyclotomic, ctx);
  cyclotomic->callback([&ctx, ca] {
    const UniPolynomial phi = numbers::cyclotomic_polynomial(ca->n);
    if (ca->element.empty() && !ca->plus.empty()) throw UsageError("--plus needs --element");
    std::optional<CyclotomicElement> e;
    if (!ca->element.empty()) {
      e = CyclotomicElement::power_basis_reduce(ca->n, parse_in_zeta(ca->element));
      if (!ca->plus.empty())
        e = numbers::cyc_add(*e, CyclotomicElement::power_basis_reduce(ca->n, parse_in_zeta(ca->plus)));
    }
    ctx.begin("numbers cyclotomic");
    std::optional<numbers::NumericValue> value;
    if (e) value = numbers::numeric_eval(*e, ca->digits);
    if (ctx.json) {
      ctx.doc["n"] = ca->n;
      ctx.doc["phi"] = numbers::euler_phi(ca->n);
      ctx.doc["polynomial"] = numbers::render(phi);
      if (e) {
        ctx.doc["element"] = numbers::render(*e);
        ctx.doc["value"] = numeric_json(*value);
      }
      return;
    }
    ctx.out << "Phi_" << ca->n << " = " << numbers::render(phi) << '\n';
    if (e) ctx.out << "element = " << numbers::render(*e) << '\n' << "value: " << numeric_text(*value) << '\n';
  });

  struct FactorArgs {
    std::string poly;
    std::string gcd_with;
  };
  auto xa = std::make_shared<FactorArgs>();
  auto* factor = numbers_cmd->add_subcommand("factor", "Factor a polynomial over the rationals");
  factor->add_option("--poly", xa->poly, "Polynomial in x, degree at most 8")->required();
  factor->add_option("--gcd", xa->gcd_with, "Also print the gcd with this polynomial");
  add_json_flag(factor, ctx);
  factor->callback([&ctx, xa] {
    const UniPolynomial p = numbers::parse_unipoly(xa->poly);
    const auto split = numbers::content_primitive(p);
    const auto f = numbers::factor_integer_poly(p);
    const UniPolynomial sqf = numbers::squarefree_part(p);
    const UniPolynomial dp = numbers::derivative(p);
    std::optional<Rational> disc;
    if (p.degree() >= 1) disc = numbers::discriminant(p);
    std::optional<UniPolynomial> g;
    if (!xa->gcd_with.empty()) g = numbers::poly_gcd(p, numbers::parse_unipoly(xa->gcd_with));
    ctx.begin("numbers factor");
    if (ctx.json) {
      ctx.doc["polynomial"] = numbers::render(p);
      ctx.doc["content"] = to_string(split.content);
      ctx.doc["primitive"] = numbers::render(split.primitive);
      ctx.doc["unit"] = to_string(f.unit);
      std::vector<std::string> fs;
      for (const auto& q : f.factors) fs.push_back(numbers::render(q));
      ctx.doc["factors"] = fs;
      ctx.doc["irreducible"] = f.factors.size() == 1;
      ctx.doc["derivative"] = numbers::render(dp);
      ctx.doc["squarefree_part"] = numbers::render(sqf);
      if (disc) ctx.doc["discriminant"] = to_string(*disc);
      if (g) ctx.doc["gcd"] = numbers::render(*g);
      return;
    }
    ctx.out << "content = " << to_string(split.content) << ", primitive = " << numbers::render(split.primitive) << '\n'
            << "factorization = " << factorization_text(f) << '\n'
            << "irreducible = " << (f.factors.size() == 1 ? "true" : "false") << '\n'
            << "derivative = " << numbers::render(dp) << '\n'
            << "squarefree part = " << numbers::render(sqf) << '\n';
    if (disc) ctx.out << "discriminant = " << to_string(*disc) << '\n';
    if (g) ctx.out << "gcd = " << numbers::render(*g) << '\n';
  });
}

}  // namespace numlab::cli
