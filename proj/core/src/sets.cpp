#include "numlab/sets.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace numlab::sets {

namespace {

__extension__ using u128 = unsigned __int128;

// floor(sqrt(v)) for 128-bit v.
u128 isqrt(u128 v) {
  if (v == 0) return 0;
  u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

BigInt pair(const BigInt& x, const BigInt& y) {
  BigInt s = x + y;
  return s * (s + 1) / 2 + y;
}

std::pair<BigInt, BigInt> unpair(const BigInt& n) {
  BigInt disc = 8 * n + 1;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  BigInt w = (root - 1) / 2;
  BigInt y = n - w * (w + 1) / 2;
  return {w - y, y};
}

Natural pair(Natural x, Natural y) {
  u128 s = static_cast<u128>(x) + y;
  u128 r = s * (s + 1) / 2 + y;
  if (r > std::numeric_limits<Natural>::max()) throw std::overflow_error("pair: result exceeds 64 bits");
  return static_cast<Natural>(r);
}

std::pair<Natural, Natural> unpair(Natural n) {
  u128 w = (isqrt(static_cast<u128>(n) * 8 + 1) - 1) / 2;
  u128 y = n - w * (w + 1) / 2;
  return {static_cast<Natural>(w - y), static_cast<Natural>(y)};
}

BigInt tuple_encode(std::span<const BigInt> xs) {
  if (xs.empty()) return 0;
  BigInt acc = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) acc = pair(xs[i], acc);
  return acc;
}

std::vector<BigInt> tuple_decode(const BigInt& n, std::size_t k) {
  if (k == 0) throw std::invalid_argument("tuple_decode: k must be at least 1");
  std::vector<BigInt> out;
  out.reserve(k);
  BigInt rest = n;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    auto [head, tail] = unpair(rest);
    out.push_back(std::move(head));
    rest = std::move(tail);
  }
  out.push_back(std::move(rest));
  return out;
}

Natural tuple_encode(std::span<const Natural> xs) {
  if (xs.empty()) return 0;
  Natural acc = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) acc = pair(xs[i], acc);
  return acc;
}

std::vector<Natural> tuple_decode(Natural n, std::size_t k) {
  if (k == 0) throw std::invalid_argument("tuple_decode: k must be at least 1");
  std::vector<Natural> out;
  out.reserve(k);
  Natural rest = n;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    auto [head, tail] = unpair(rest);
    out.push_back(head);
    rest = tail;
  }
  out.push_back(rest);
  return out;
}

// ---------------------------------------------------------------------------

Enumerator::Enumerator(std::unique_ptr<EnumeratorSource> source) : source_(std::move(source)) {}

PullResult Enumerator::pull(Natural budget) {
  if (exhausted_) return {PullStatus::Exhausted, 0, 0, {}};
  PullResult r = source_->pull(budget);
  if (r.status == PullStatus::Exhausted) exhausted_ = true;
  return r;
}

std::pair<std::vector<Natural>, PullStatus> Enumerator::take(std::size_t count, Natural budget) {
  std::vector<Natural> items;
  PullStatus last = PullStatus::BudgetExceeded;
  while (items.size() < count) {
    PullResult r = pull(budget);
    budget -= std::min(budget, r.work);
    last = r.status;
    if (r.status != PullStatus::Item) break;
    items.push_back(r.item);
  }
  if (items.size() == count) last = PullStatus::Item;
  return {std::move(items), last};
}

DecidablePredicate DecidablePredicate::native(std::function<bool(Natural)> fn, std::string name) {
  return DecidablePredicate([fn = std::move(fn)](Natural n) -> std::optional<bool> { return fn(n); },
                            std::move(name));
}

DecidablePredicate DecidablePredicate::from_program(machine::Program program, Natural fuel_per_call,
                                                    std::string name) {
  return DecidablePredicate(
      [program = std::move(program), fuel_per_call](Natural n) -> std::optional<bool> {
        Natural input[] = {n};
        auto out = machine::run(program, input, fuel_per_call);
        if (out.status == machine::RunStatus::FuelExhausted) return std::nullopt;
        return out.output != 0;
      },
      std::move(name));
}

DecidablePredicate DecidablePredicate::negated() const {
  return DecidablePredicate(
      [d = decide_](Natural n) -> std::optional<bool> {
        auto v = d(n);
        if (!v) return std::nullopt;
        return !*v;
      },
      "not " + name_);
}

namespace {

class PredicateSource final : public EnumeratorSource {
 public:
  explicit PredicateSource(DecidablePredicate p) : pred_(std::move(p)) {}

  PullResult pull(Natural budget) override {
    PullResult r;
    while (r.work < budget) {
      if (done_) return {PullStatus::Exhausted, 0, r.work, {}};
      const Natural candidate = next_;
      auto verdict = pred_.decide(candidate);
      ++r.work;
      if (!verdict) {
        r.status = PullStatus::DeciderFailure;
        r.error = "decider ran out of fuel on input " + std::to_string(candidate);
        return r;
      }
      if (next_ == std::numeric_limits<Natural>::max())
        done_ = true;
      else
        ++next_;
      if (*verdict) {
        r.status = PullStatus::Item;
        r.item = candidate;
        return r;
      }
    }
    r.status = PullStatus::BudgetExceeded;
    return r;
  }

 private:
  DecidablePredicate pred_;
  Natural next_ = 0;
  bool done_ = false;
};

class CounterSource final : public EnumeratorSource {
 public:
  PullResult pull(Natural budget) override {
    if (budget == 0) return {PullStatus::BudgetExceeded, 0, 0, {}};
    return {PullStatus::Item, next_++, 1, {}};
  }

 private:
  Natural next_ = 0;
};

class SequenceSource final : public EnumeratorSource {
 public:
  explicit SequenceSource(std::vector<Natural> items) : items_(std::move(items)) {}

  PullResult pull(Natural budget) override {
    if (pos_ == items_.size()) return {PullStatus::Exhausted, 0, 0, {}};
    if (budget == 0) return {PullStatus::BudgetExceeded, 0, 0, {}};
    return {PullStatus::Item, items_[pos_++], 1, {}};
  }

 private:
  std::vector<Natural> items_;
  std::size_t pos_ = 0;
};

}  // namespace

Enumerator enumerator_from_predicate(DecidablePredicate p) {
  return Enumerator(std::make_unique<PredicateSource>(std::move(p)));
}

Enumerator dovetail_tuples(std::size_t k) {
  if (k == 0) throw std::invalid_argument("dovetail_tuples: k must be at least 1");
  return Enumerator(std::make_unique<CounterSource>());
}

Enumerator enumerator_from_sequence(std::vector<Natural> items) {
  return Enumerator(std::make_unique<SequenceSource>(std::move(items)));
}

Membership member_semidecide(Enumerator& e, Natural n, Natural budget) {
  while (budget > 0) {
    PullResult r = e.pull(budget);
    budget -= std::min(budget, r.work);
    switch (r.status) {
      case PullStatus::Item:
        if (r.item == n) return Membership::Found;
        break;
      case PullStatus::Exhausted:
        return Membership::ExhaustedWithoutFinding;
      case PullStatus::BudgetExceeded:
      case PullStatus::DeciderFailure:
        return Membership::NotFoundWithinBudget;
    }
  }
  return Membership::NotFoundWithinBudget;
}

bool is_prime(Natural n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Natural d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool is_composite(Natural n) { return n >= 4 && !is_prime(n); }

bool is_square(Natural n) {
  Natural r = static_cast<Natural>(isqrt(n));
  return r * r == n;
}

}  // namespace numlab::sets
