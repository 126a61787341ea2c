#include "numlab/miu.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace numlab::reductions {

namespace {

__extension__ using u128 = unsigned __int128;

constexpr char kAlphabet[] = {'M', 'I', 'U'};

int letter_value(char c) {
  switch (c) {
    case 'M':
      return 0;
    case 'I':
      return 1;
    case 'U':
      return 2;
    default:
      return -1;
  }
}

const Sentence& axiom() {
  static const Sentence mi("MI");
  return mi;
}

}  // namespace

Sentence::Sentence(std::string text) : text_(std::move(text)) {
  if (text_.empty()) throw std::invalid_argument("sentence must be nonempty");
  for (char c : text_)
    if (letter_value(c) < 0) throw std::invalid_argument(std::string("letter '") + c + "' is not in {M, I, U}");
}

Sentence sentence_of_index(std::uint64_t n) {
  // Sentences of length L occupy indices [3 + 9 + ... + 3^(L-1), ... + 3^L).
  std::size_t len = 1;
  u128 block = 3;
  u128 rest = n;
  while (rest >= block) {
    rest -= block;
    block *= 3;
    ++len;
  }
  std::string text(len, 'M');
  for (std::size_t i = len; i-- > 0;) {
    text[i] = kAlphabet[static_cast<int>(rest % 3)];
    rest /= 3;
  }
  return Sentence(std::move(text));
}

std::uint64_t index_of_sentence(const Sentence& s) {
  // past this length even the smallest index overflows, and the 128-bit
  // arithmetic below would too
  if (s.size() > kMaxIndexedSentenceLength + 1)
    throw std::overflow_error("sentence too long to index in 64 bits");
  u128 offset = 0, block = 3;
  for (std::size_t l = 1; l < s.size(); ++l) {
    offset += block;
    block *= 3;
  }
  u128 digits = 0;
  for (char c : s.text()) digits = digits * 3 + static_cast<unsigned>(letter_value(c));
  u128 idx = offset + digits;
  if (idx > UINT64_MAX) throw std::overflow_error("sentence too long to index in 64 bits");
  return static_cast<std::uint64_t>(idx);
}

std::vector<Sentence> miu_successors(const Sentence& s) {
  const std::string& t = s.text();
  std::vector<std::string> out;
  if (t.back() == 'I') out.push_back(t + "U");
  if (t.front() == 'M') out.push_back(t + t.substr(1));
  for (std::size_t i = 0; i + 3 <= t.size(); ++i)
    if (t.compare(i, 3, "III") == 0) out.push_back(t.substr(0, i) + "U" + t.substr(i + 3));
  for (std::size_t i = 0; i + 2 <= t.size(); ++i)
    if (t.compare(i, 2, "UU") == 0) {
      std::string r = t.substr(0, i) + t.substr(i + 2);
      if (!r.empty()) out.push_back(std::move(r));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<Sentence> result;
  result.reserve(out.size());
  for (auto& r : out) result.emplace_back(std::move(r));
  return result;
}

bool MiuClosure::contains(std::string_view text) const {
  if (text.empty()) return false;
  for (char c : text)
    if (letter_value(c) < 0) return false;
  return theorems.contains(Sentence(std::string(text)));
}

MiuClosure miu_theorems(std::size_t depth, std::size_t length_cap) {
  MiuClosure c;
  c.depth = depth;
  c.length_cap = length_cap;
  if (axiom().size() > length_cap) return c;
  c.theorems.insert(axiom());
  c.discovery_order.push_back(axiom());
  std::vector<Sentence> frontier{axiom()};
  for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<Sentence> next;
    for (const auto& s : frontier)
      for (auto& succ : miu_successors(s)) {
        if (succ.size() > length_cap) continue;
        if (c.theorems.insert(succ).second) {
          c.discovery_order.push_back(succ);
          next.push_back(std::move(succ));
        }
      }
    frontier = std::move(next);
  }
  return c;
}

namespace {

class TheoremSource final : public sets::EnumeratorSource {
 public:
  explicit TheoremSource(std::size_t cap) : cap_(cap) {
    if (axiom().size() <= cap_) {
      seen_.insert(axiom());
      pending_.push_back(axiom());
      queue_.push_back(axiom());
    }
  }

  sets::PullResult pull(std::uint64_t budget) override {
    sets::PullResult r;
    for (;;) {
      if (!pending_.empty()) {
        r.status = sets::PullStatus::Item;
        r.item = index_of_sentence(pending_.front());
        pending_.pop_front();
        return r;
      }
      if (queue_.empty()) {
        r.status = sets::PullStatus::Exhausted;
        return r;
      }
      if (r.work >= budget) {
        r.status = sets::PullStatus::BudgetExceeded;
        return r;
      }
      Sentence s = std::move(queue_.front());
      queue_.pop_front();
      ++r.work;
      for (auto& succ : miu_successors(s)) {
        if (succ.size() > cap_ || !seen_.insert(succ).second) continue;
        pending_.push_back(succ);
        queue_.push_back(std::move(succ));
      }
    }
  }

 private:
  std::size_t cap_;
  std::set<Sentence> seen_;
  std::deque<Sentence> pending_;
  std::deque<Sentence> queue_;
};

}  // namespace

sets::Enumerator theorem_set_enumerator(std::size_t length_cap) {
  return sets::Enumerator(std::make_unique<TheoremSource>(length_cap));
}

}  // namespace numlab::reductions
