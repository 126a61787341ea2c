#pragma once

// The MIU string-rewriting system as a concrete formal theory: alphabet
// {M, I, U}, axiom "MI", and four rules of inference
//
//   xI   -> xIU     (append U after a trailing I)
//   Mx   -> Mxx     (double what follows M)
//   xIIIy -> xUy    (replace III by U)
//   xUUy -> xy      (delete UU)
//
// Sentences are numbered in length-lexicographic order with M < I < U.

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "numlab/sets.hpp"

namespace numlab::reductions {

/// Nonempty string over {M, I, U}.
class Sentence {
 public:
  /// Throws std::invalid_argument on an empty string or a foreign letter.
  explicit Sentence(std::string text);
  const std::string& text() const noexcept { return text_; }
  std::size_t size() const noexcept { return text_.size(); }
  auto operator<=>(const Sentence&) const = default;

 private:
  std::string text_;
};

/// Longest length at which every sentence's index fits in 64 bits. Some
/// sentences one letter longer still fit (2^64 - 1 itself has 41 letters).
inline constexpr std::size_t kMaxIndexedSentenceLength = 40;

Sentence sentence_of_index(std::uint64_t n);
/// Throws std::overflow_error when the index exceeds 2^64 - 1.
std::uint64_t index_of_sentence(const Sentence& s);

/// All one-step consequences of `s` (deduplicated, sorted).
std::vector<Sentence> miu_successors(const Sentence& s);

inline constexpr std::size_t kDefaultLengthCap = 12;

struct MiuClosure {
  std::size_t depth = 0;
  std::size_t length_cap = kDefaultLengthCap;
  std::vector<Sentence> discovery_order;  // breadth-first, axiom first
  std::set<Sentence> theorems;

  bool contains(std::string_view text) const;
};

/// Theorems derivable in at most `depth` rule applications, never passing
/// through sentences longer than `length_cap`.
MiuClosure miu_theorems(std::size_t depth, std::size_t length_cap = kDefaultLengthCap);

/// Indices of theorems (under the length cap) in breadth-first discovery
/// order; one work unit per sentence expanded. Finite, so it ends Exhausted.
sets::Enumerator theorem_set_enumerator(std::size_t length_cap = kDefaultLengthCap);

}  // namespace numlab::reductions
