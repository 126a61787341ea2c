#pragma once

// Listable sets as budgeted, resumable enumerators, plus the Cantor pairing
// codecs used to number tuples and other finite objects.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "numlab/bigint.hpp"
#include "numlab/machine.hpp"

namespace numlab::sets {

using Natural = std::uint64_t;

// ---------------------------------------------------------------------------
// Cantor pairing: pair(x, y) = (x + y)(x + y + 1) / 2 + y

BigInt pair(const BigInt& x, const BigInt& y);
std::pair<BigInt, BigInt> unpair(const BigInt& n);

/// Word-sized variants. `pair` throws std::overflow_error when the result
/// does not fit in 64 bits.
Natural pair(Natural x, Natural y);
std::pair<Natural, Natural> unpair(Natural n);

/// Right-nested pairing: [x] -> x, [x1, x2, ...] -> pair(x1, encode([x2, ...])).
/// The empty tuple encodes to 0.
BigInt tuple_encode(std::span<const BigInt> xs);
/// Inverse of tuple_encode for tuples of length k >= 1.
std::vector<BigInt> tuple_decode(const BigInt& n, std::size_t k);

std::vector<Natural> tuple_decode(Natural n, std::size_t k);
Natural tuple_encode(std::span<const Natural> xs);

// ---------------------------------------------------------------------------
// Enumerators

enum class PullStatus {
  Item,             // `item` holds the next element
  Exhausted,        // the set is finite and fully emitted; absorbing
  BudgetExceeded,   // no element found within the budget; the cursor is kept
  DeciderFailure,   // a fuel-bounded decider could not reach a verdict
};

struct PullResult {
  PullStatus status = PullStatus::BudgetExceeded;
  Natural item = 0;
  Natural work = 0;   // budget units consumed by this pull
  std::string error;  // set on DeciderFailure

  bool has_item() const noexcept { return status == PullStatus::Item; }
};

/// The resumable cursor behind an Enumerator. Implementations must never
/// consume more than `budget` work units in a single call.
class EnumeratorSource {
 public:
  virtual ~EnumeratorSource() = default;
  virtual PullResult pull(Natural budget) = 0;
};

/// Budgeted, pull-based stream of naturals. Single owner; movable, not
/// copyable. Once Exhausted is reported every later pull reports it again.
class Enumerator {
 public:
  explicit Enumerator(std::unique_ptr<EnumeratorSource> source);

  PullResult pull(Natural budget);
  bool exhausted() const noexcept { return exhausted_; }

  /// Pulls until `count` items are collected, the cumulative budget runs out,
  /// or the stream ends. The last status seen is returned alongside.
  std::pair<std::vector<Natural>, PullStatus> take(std::size_t count, Natural budget);

 private:
  std::unique_ptr<EnumeratorSource> source_;
  bool exhausted_ = false;
};

/// Total decision procedure on the naturals. `decide` returns nullopt only for
/// program-backed deciders that ran out of fuel.
class DecidablePredicate {
 public:
  using Decider = std::function<std::optional<bool>(Natural)>;

  static DecidablePredicate native(std::function<bool(Natural)> fn, std::string name = {});
  /// Runs `program` on input X1 = n; accepts when it halts with Y != 0.
  static DecidablePredicate from_program(machine::Program program, Natural fuel_per_call,
                                         std::string name = {});

  std::optional<bool> decide(Natural n) const { return decide_(n); }
  const std::string& name() const noexcept { return name_; }

  DecidablePredicate negated() const;

 private:
  DecidablePredicate(Decider d, std::string name) : decide_(std::move(d)), name_(std::move(name)) {}
  Decider decide_;
  std::string name_;
};

/// Emits {n : p(n)} in increasing order; one work unit per candidate tested.
Enumerator enumerator_from_predicate(DecidablePredicate p);

/// Emits 0, 1, 2, ... ; item n stands for the k-tuple tuple_decode(n, k).
Enumerator dovetail_tuples(std::size_t k);

/// Finite enumerator over a fixed sequence (one work unit per item).
Enumerator enumerator_from_sequence(std::vector<Natural> items);

enum class Membership { Found, NotFoundWithinBudget, ExhaustedWithoutFinding };

/// Semi-decision: pulls `e` until `n` appears, the budget runs out, or the
/// stream ends. Never reports Found for an element the enumerator does not emit.
Membership member_semidecide(Enumerator& e, Natural n, Natural budget);

// Reference predicates used across the workbench.
bool is_prime(Natural n);
bool is_composite(Natural n);
bool is_square(Natural n);

}  // namespace numlab::sets
