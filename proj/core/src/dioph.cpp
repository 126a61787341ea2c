#include "numlab/dioph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "numlab/errors.hpp"

namespace numlab::dioph {

// ---------------------------------------------------------------------------
// Monomial / IntPolynomial

Monomial::Monomial(std::map<std::string, unsigned> exponents) : exps_(std::move(exponents)) {
  std::erase_if(exps_, [](const auto& kv) { return kv.second == 0; });
}

Monomial Monomial::variable(std::string name, unsigned power) {
  return Monomial(std::map<std::string, unsigned>{{std::move(name), power}});
}

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (const auto& [_, e] : exps_) d += e;
  return d;
}

unsigned Monomial::degree_in(const std::string& var) const {
  auto it = exps_.find(var);
  return it == exps_.end() ? 0 : it->second;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (const auto& [v, e] : other.exps_) out.exps_[v] += e;
  return out;
}

bool Monomial::operator<(const Monomial& other) const {
  const unsigned a = degree(), b = other.degree();
  if (a != b) return a > b;
  return exps_ < other.exps_;
}

IntPolynomial::IntPolynomial(long constant) : IntPolynomial(BigInt(constant)) {}

IntPolynomial::IntPolynomial(const BigInt& constant) {
  if (constant != 0) terms_.emplace(Monomial(), constant);
}

IntPolynomial::IntPolynomial(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

IntPolynomial IntPolynomial::variable(const std::string& name) {
  Terms t;
  t.emplace(Monomial::variable(name), BigInt(1));
  return IntPolynomial(std::move(t));
}

unsigned IntPolynomial::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::set<std::string> IntPolynomial::variables() const {
  std::set<std::string> out;
  for (const auto& [m, _] : terms_)
    for (const auto& [v, __] : m.exponents()) out.insert(v);
  return out;
}

BigInt IntPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void IntPolynomial::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  IntPolynomial out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
  return out;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& [_, c] : out.terms_) c = -c;
  return out;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result(1L);
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

IntPolynomial poly_arith(ArithOp op, const IntPolynomial& p, const IntPolynomial& q) {
  switch (op) {
    case ArithOp::Add:
      return p + q;
    case ArithOp::Multiply:
      return p * q;
    case ArithOp::Negate:
      return -p;
  }
  throw std::invalid_argument("poly_arith: unknown operation");
}

// ---------------------------------------------------------------------------
// Parsing and rendering

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  IntPolynomial parse() {
    IntPolynomial p = expression();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("position " + std::to_string(pos_) + ": " + msg, pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  IntPolynomial expression() {
    bool negate = accept('-');
    IntPolynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  IntPolynomial term() {
    IntPolynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  IntPolynomial factor() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return IntPolynomial(BigInt(std::string(digits())));
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             ((s_[pos_] >= 'a' && s_[pos_] <= 'z') || std::isdigit(static_cast<unsigned char>(s_[pos_]))))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      unsigned power = 1;
      if (accept('^')) {
        skip_ws();
        auto d = digits();
        if (d.empty()) fail("exponent must be a natural literal");
        if (d.size() > 6) fail("exponent too large");
        power = static_cast<unsigned>(std::stoul(std::string(d)));
      }
      if (power == 0) return IntPolynomial(1L);
      IntPolynomial::Terms t;
      t.emplace(Monomial::variable(std::move(name), power), BigInt(1));
      return IntPolynomial(std::move(t));
    }
    if (c == '(') {
      ++pos_;
      IntPolynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string render_monomial(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.exponents()) {
    if (!out.empty()) out += '*';
    out += v;
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace

IntPolynomial poly_parse(std::string_view text) { return Parser(text).parse(); }

std::string render(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_constant()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += render_monomial(m);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

BigInt poly_eval(const IntPolynomial& p, const Assignment& assignment) {
  BigInt total = 0;
  BigInt power;
  for (const auto& [m, c] : p.terms()) {
    BigInt term = c;
    for (const auto& [v, e] : m.exponents()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) throw UnboundVariable(v);
      mpz_pow_ui(power.get_mpz_t(), it->second.get_mpz_t(), e);
      term *= power;
    }
    total += term;
  }
  return total;
}

IntPolynomial substitute(const IntPolynomial& p, const std::string& var, const BigInt& value) {
  IntPolynomial::Terms out;
  BigInt power;
  for (const auto& [m, c] : p.terms()) {
    auto exps = m.exponents();
    BigInt coef = c;
    if (auto it = exps.find(var); it != exps.end()) {
      mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(), it->second);
      coef *= power;
      exps.erase(it);
    }
    auto [slot, fresh] = out.emplace(Monomial(std::move(exps)), coef);
    if (!fresh) slot->second += coef;
  }
  return IntPolynomial(std::move(out));
}

namespace {

// Polynomial with variables replaced by positions into a value vector.
class CompiledPoly {
 public:
  CompiledPoly(const IntPolynomial& p, const std::vector<std::string>& vars) {
    for (const auto& [m, c] : p.terms()) {
      Term t{c, std::vector<unsigned>(vars.size(), 0)};
      for (const auto& [v, e] : m.exponents()) {
        auto it = std::find(vars.begin(), vars.end(), v);
        if (it == vars.end()) throw UnboundVariable(v);
        t.exps[static_cast<std::size_t>(it - vars.begin())] = e;
      }
      terms_.push_back(std::move(t));
    }
  }

  void eval(const std::vector<Natural>& xs, BigInt& out) const {
    out = 0;
    for (const auto& t : terms_) {
      scratch_ = t.coef;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (t.exps[i] == 0) continue;
        if (xs[i] == 0) {
          scratch_ = 0;
          break;
        }
        mpz_ui_pow_ui(power_.get_mpz_t(), xs[i], t.exps[i]);
        scratch_ *= power_;
      }
      out += scratch_;
    }
  }

  /// +1 when every non-constant coefficient is positive, -1 when every one is
  /// negative, 0 otherwise (including when there are none).
  int monotone_sign() const {
    int sign = 0;
    for (const auto& t : terms_) {
      bool constant = std::all_of(t.exps.begin(), t.exps.end(), [](unsigned e) { return e == 0; });
      if (constant) continue;
      int s = sgn(t.coef);
      if (sign == 0)
        sign = s;
      else if (s != sign)
        return 0;
    }
    return sign;
  }

 private:
  struct Term {
    BigInt coef;
    std::vector<unsigned> exps;
  };
  std::vector<Term> terms_;
  mutable BigInt scratch_, power_;
};

Assignment make_assignment(const DiophantineFamily& fam, Natural t, const std::vector<Natural>& xs) {
  Assignment a;
  a.emplace(fam.parameter(), from_u64(t));
  for (std::size_t i = 0; i < xs.size(); ++i) a.emplace(fam.unknowns()[i], from_u64(xs[i]));
  return a;
}

void assert_witness(const DiophantineFamily& fam, Natural t, const std::vector<Natural>& xs) {
  if (poly_eval(fam.poly(), make_assignment(fam, t, xs)) != 0)
    throw std::logic_error("search produced a witness that does not satisfy the equation");
}

class BoxScanner {
 public:
  BoxScanner(const CompiledPoly& g, std::size_t n, Natural bound)
      : g_(g), n_(n), bound_(bound), xs_(n, 0), sign_(g.monotone_sign()) {}

  std::optional<std::vector<Natural>> run() {
    if (n_ == 0) {
      g_.eval(xs_, value_);
      if (value_ == 0) return xs_;
      return std::nullopt;
    }
    if (scan(0)) return xs_;
    return std::nullopt;
  }

 private:
  // Scans positions >= level with xs_[level..] currently zero.
  bool scan(std::size_t level) {
    for (Natural v = 0;; ++v) {
      xs_[level] = v;
      if (sign_ != 0) {
        // value at (prefix, v, 0, ..., 0) bounds the whole subtree.
        g_.eval(xs_, value_);
        int s = sgn(value_);
        if (s == 0) return true;
        if (s == sign_) break;  // only moves further from zero
        if (level + 1 < n_ && scan(level + 1)) return true;
      } else if (level + 1 < n_) {
        if (scan(level + 1)) return true;
      } else {
        g_.eval(xs_, value_);
        if (value_ == 0) return true;
      }
      if (v == bound_) break;
    }
    xs_[level] = 0;
    return false;
  }

  const CompiledPoly& g_;
  std::size_t n_;
  Natural bound_;
  std::vector<Natural> xs_;
  int sign_;
  BigInt value_;
};

}  // namespace

DiophantineFamily::DiophantineFamily(IntPolynomial poly, std::string parameter,
                                     std::vector<std::string> unknowns)
    : poly_(std::move(poly)), parameter_(std::move(parameter)), unknowns_(std::move(unknowns)) {
  if (std::find(unknowns_.begin(), unknowns_.end(), parameter_) != unknowns_.end())
    throw std::invalid_argument("parameter '" + parameter_ + "' listed among the unknowns");
  std::set<std::string> seen;
  for (const auto& u : unknowns_)
    if (!seen.insert(u).second) throw std::invalid_argument("unknown '" + u + "' listed twice");
  for (const auto& v : poly_.variables())
    if (v != parameter_ && !seen.contains(v))
      throw std::invalid_argument("variable '" + v + "' is neither the parameter nor an unknown");
}

DiophantineFamily::DiophantineFamily(IntPolynomial poly, std::string parameter)
    : poly_(std::move(poly)), parameter_(std::move(parameter)) {
  for (const auto& v : poly_.variables())
    if (v != parameter_) unknowns_.push_back(v);
}

BigInt DiophantineFamily::evaluate(Natural t, const std::vector<Natural>& xs) const {
  if (xs.size() != unknowns_.size()) throw std::invalid_argument("wrong number of unknowns");
  return poly_eval(poly_, make_assignment(*this, t, xs));
}

SearchResult search_solution(const DiophantineFamily& fam, Natural t, const SearchStrategy& strategy) {
  const IntPolynomial g = substitute(fam.poly(), fam.parameter(), from_u64(t));
  const CompiledPoly compiled(g, fam.unknowns());
  const std::size_t n = fam.unknowns().size();
  SearchResult result;

  if (const auto* box = std::get_if<BoxSearch>(&strategy)) {
    result.bound = box->bound;
    result.witness = BoxScanner(compiled, n, box->bound).run();
    result.exhaustive = !result.witness;
  } else {
    const auto& dv = std::get<DovetailSearch>(strategy);
    result.bound = dv.budget;
    BigInt value;
    for (Natural i = 0; i < dv.budget; ++i) {
      std::vector<Natural> xs = n == 0 ? std::vector<Natural>{} : sets::tuple_decode(i, n);
      compiled.eval(xs, value);
      if (value == 0) {
        result.witness = std::move(xs);
        break;
      }
      if (n == 0) break;
    }
  }
  if (result.witness) assert_witness(fam, t, *result.witness);
  return result;
}

namespace {

class DiophantineSource final : public sets::EnumeratorSource {
 public:
  explicit DiophantineSource(const DiophantineFamily& fam) : fam_(fam), compiled_(fam.poly(), vars(fam)) {}

  sets::PullResult pull(Natural budget) override {
    sets::PullResult r;
    const std::size_t k = 1 + fam_.unknowns().size();
    while (r.work < budget) {
      std::vector<Natural> tuple = sets::tuple_decode(next_++, k);
      ++r.work;
      if (seen_.contains(tuple[0])) continue;
      compiled_.eval(tuple, value_);
      if (value_ == 0) {
        std::vector<Natural> xs(tuple.begin() + 1, tuple.end());
        assert_witness(fam_, tuple[0], xs);
        seen_.insert(tuple[0]);
        r.status = sets::PullStatus::Item;
        r.item = tuple[0];
        return r;
      }
    }
    r.status = sets::PullStatus::BudgetExceeded;
    return r;
  }

 private:
  static std::vector<std::string> vars(const DiophantineFamily& fam) {
    std::vector<std::string> v{fam.parameter()};
    v.insert(v.end(), fam.unknowns().begin(), fam.unknowns().end());
    return v;
  }

  DiophantineFamily fam_;
  CompiledPoly compiled_;
  Natural next_ = 0;
  std::unordered_set<Natural> seen_;
  BigInt value_;
};

}  // namespace

sets::Enumerator diophantine_enumerator(const DiophantineFamily& fam) {
  return sets::Enumerator(std::make_unique<DiophantineSource>(fam));
}

const std::map<std::string, DiophantineFamily>& builtin_families() {
  static const std::map<std::string, DiophantineFamily> registry = [] {
    std::map<std::string, DiophantineFamily> m;
    m.emplace("even", DiophantineFamily(poly_parse("t - 2*x"), "t", {"x"}));
    m.emplace("square", DiophantineFamily(poly_parse("t - x^2"), "t", {"x"}));
    m.emplace("composite", DiophantineFamily(poly_parse("t - (x+2)*(y+2)"), "t", {"x", "y"}));
    return m;
  }();
  return registry;
}

bool exp_triple_member(const BigInt& a, const BigInt& b, const BigInt& c) {
  if (sgn(a) < 0 || sgn(b) < 0 || sgn(c) < 0) throw std::invalid_argument("exp_triple_member: naturals only");
  if (b == 0) return c == 1;
  if (a == 0) return c == 0;
  if (a == 1) return c == 1;
  BigInt acc = 1;
  for (BigInt i = 0; i < b; ++i) {
    acc *= a;
    if (acc > c) return false;
  }
  return acc == c;
}

RepresentationReport verify_representation(const DiophantineFamily& fam,
                                           const sets::DecidablePredicate& ref, Natural t_lo,
                                           Natural t_hi, Natural witness_bound) {
  RepresentationReport rep;
  rep.t_lo = t_lo;
  rep.t_hi = t_hi;
  rep.witness_bound = witness_bound;
  if (t_lo > t_hi) return rep;
  for (Natural t = t_lo;; ++t) {
    auto expected = ref.decide(t);
    auto found = search_solution(fam, t, BoxSearch{witness_bound});
    if (!expected) {
      // the reference could not decide; nothing can be concluded
      ++rep.unresolved;
      if (rep.unresolved_examples.size() < RepresentationReport::kMaxExamples)
        rep.unresolved_examples.push_back(t);
    } else if (*expected) {
      if (found.solvable()) {
        ++rep.agree_positive;
        if (rep.positive_witnesses.size() < RepresentationReport::kMaxExamples)
          rep.positive_witnesses.emplace(t, *found.witness);
      } else {
        ++rep.unresolved;
        if (rep.unresolved_examples.size() < RepresentationReport::kMaxExamples)
          rep.unresolved_examples.push_back(t);
      }
    } else if (found.solvable()) {
      ++rep.disagree;
      if (rep.disagree_examples.size() < RepresentationReport::kMaxExamples)
        rep.disagree_examples.push_back(t);
    } else {
      ++rep.agree_negative;
    }
    if (t == t_hi) break;
  }
  return rep;
}

}  // namespace numlab::dioph
