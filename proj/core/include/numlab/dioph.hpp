#pragma once

// Multivariate integer polynomials and one-parameter Diophantine families
// f(t, x1, ..., xn) = 0 with unknowns ranging over the naturals.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "numlab/bigint.hpp"
#include "numlab/sets.hpp"

namespace numlab::dioph {

using Natural = std::uint64_t;

/// Product of variables raised to positive powers. The empty monomial is 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::map<std::string, unsigned> exponents);
  static Monomial variable(std::string name, unsigned power = 1);

  const std::map<std::string, unsigned>& exponents() const noexcept { return exps_; }
  unsigned degree() const noexcept;
  unsigned degree_in(const std::string& var) const;
  bool is_constant() const noexcept { return exps_.empty(); }

  Monomial operator*(const Monomial& other) const;
  /// Higher total degree first, then lexicographic on the exponent maps.
  /// This is the key order of IntPolynomial and hence the rendering order.
  bool operator<(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

 private:
  std::map<std::string, unsigned> exps_;
};

/// Canonical sparse polynomial with integer coefficients: no zero
/// coefficients are stored, so equality is structural.
class IntPolynomial {
 public:
  using Terms = std::map<Monomial, BigInt>;

  IntPolynomial() = default;
  IntPolynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit IntPolynomial(const BigInt& constant);
  explicit IntPolynomial(Terms terms);
  static IntPolynomial variable(const std::string& name);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned degree() const noexcept;
  std::set<std::string> variables() const;
  BigInt coefficient(const Monomial& m) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  IntPolynomial pow(unsigned e) const;

  bool operator==(const IntPolynomial& o) const { return terms_ == o.terms_; }

 private:
  void add_term(const Monomial& m, const BigInt& c);
  Terms terms_;
};

enum class ArithOp { Add, Multiply, Negate };

/// Ring operation dispatcher; `q` is ignored for Negate.
IntPolynomial poly_arith(ArithOp op, const IntPolynomial& p, const IntPolynomial& q = {});

/// Grammar:
///   expression ::= ['-'] term (('+'|'-') term)*
///   term       ::= factor ('*' factor)*
///   factor     ::= integer | variable | variable '^' natural | '(' expression ')'
/// Variables match [a-z][a-z0-9]*. ParseError::where() is a 0-based offset.
IntPolynomial poly_parse(std::string_view text);

/// Text form accepted by poly_parse, e.g. "-x*y + t - 2*x - 2*y - 4".
std::string render(const IntPolynomial& p);

using Assignment = std::map<std::string, BigInt, std::less<>>;

/// Thrown by poly_eval when a variable of the polynomial is unbound.
class UnboundVariable : public std::invalid_argument {
 public:
  explicit UnboundVariable(std::string var)
      : std::invalid_argument("unbound variable '" + var + "'"), var_(std::move(var)) {}
  const std::string& variable() const noexcept { return var_; }

 private:
  std::string var_;
};

BigInt poly_eval(const IntPolynomial& p, const Assignment& assignment);

/// Replaces `var` by a constant.
IntPolynomial substitute(const IntPolynomial& p, const std::string& var, const BigInt& value);

/// f(t, x1..xn) with a designated parameter t and ordered unknowns.
class DiophantineFamily {
 public:
  /// Throws std::invalid_argument when the parameter is among the unknowns or
  /// the polynomial mentions a variable that is neither.
  DiophantineFamily(IntPolynomial poly, std::string parameter, std::vector<std::string> unknowns);
  /// Unknowns default to every non-parameter variable in sorted order.
  DiophantineFamily(IntPolynomial poly, std::string parameter = "t");

  const IntPolynomial& poly() const noexcept { return poly_; }
  const std::string& parameter() const noexcept { return parameter_; }
  const std::vector<std::string>& unknowns() const noexcept { return unknowns_; }

  /// f(t, xs) evaluated exactly.
  BigInt evaluate(Natural t, const std::vector<Natural>& xs) const;

 private:
  IntPolynomial poly_;
  std::string parameter_;
  std::vector<std::string> unknowns_;
};

struct BoxSearch {
  Natural bound = 0;  // every unknown ranges over [0, bound]
};
struct DovetailSearch {
  Natural budget = 0;  // number of unknown tuples examined, in tuple_decode order
};
using SearchStrategy = std::variant<BoxSearch, DovetailSearch>;

struct SearchResult {
  std::optional<std::vector<Natural>> witness;  // set iff solvable
  Natural bound = 0;                            // the box bound or dovetail budget used
  bool exhaustive = false;                      // true for box searches that found nothing

  bool solvable() const noexcept { return witness.has_value(); }
};

/// Looks for natural unknowns with f(t, xs) = 0. Box search scans tuples in
/// lexicographic order and returns the least witness; when every coefficient
/// of a monomial involving an unknown has the same sign (after substituting t)
/// the scan prunes subtrees whose extreme value already has the wrong sign.
SearchResult search_solution(const DiophantineFamily& fam, Natural t, const SearchStrategy& strategy);

/// Dovetails over (t, x1..xn) tuples and emits each t with a solution once, in
/// order of discovery. One work unit per tuple examined.
sets::Enumerator diophantine_enumerator(const DiophantineFamily& fam);

/// Built-in representations: even (t - 2*x), square (t - x^2) and
/// composite (t - (x+2)*(y+2)).
const std::map<std::string, DiophantineFamily>& builtin_families();

/// c == a^b with 0^0 = 1, computed with an early exit once a partial power exceeds c.
bool exp_triple_member(const BigInt& a, const BigInt& b, const BigInt& c);

struct RepresentationReport {
  Natural t_lo = 0, t_hi = 0, witness_bound = 0;
  std::size_t agree_positive = 0;
  std::size_t agree_negative = 0;
  std::size_t disagree = 0;    // reference false but a witness exists
  std::size_t unresolved = 0;  // reference true but no witness within the bound
  std::vector<Natural> disagree_examples;
  std::vector<Natural> unresolved_examples;
  std::map<Natural, std::vector<Natural>> positive_witnesses;  // first few only

  static constexpr std::size_t kMaxExamples = 8;
};

/// Compares the solvable locus of `fam` over [t_lo, t_hi] against `ref`.
RepresentationReport verify_representation(const DiophantineFamily& fam,
                                           const sets::DecidablePredicate& ref, Natural t_lo,
                                           Natural t_hi, Natural witness_bound);

}  // namespace numlab::dioph
