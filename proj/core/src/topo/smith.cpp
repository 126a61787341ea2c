#include "numlab/topo/smith.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace numlab::topo {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    for (long v : r) e_.emplace_back(v);
  }
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const BigInt& v) { return sgn(v) == 0; });
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shapes do not compose");
  IntegerMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn(at(i, k)) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

std::string render(const IntegerMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j).get_str();
    os << '\n';
  }
  return os.str();
}

namespace {

using Cell = std::pair<std::size_t, std::size_t>;

// Nonzero entry of least absolute value in the block a[t.., t..].
std::optional<Cell> min_entry(const IntegerMatrix& a, std::size_t t) {
  std::optional<Cell> best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (sgn(a.at(i, j)) == 0) continue;
      if (!best || abs(a.at(i, j)) < abs(a.at(best->first, best->second))) best = Cell{i, j};
    }
  return best;
}

void swap_rows(IntegerMatrix& a, std::size_t r, std::size_t s) {
  if (r == s) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(s, j));
}

void swap_cols(IntegerMatrix& a, std::size_t c, std::size_t d) {
  if (c == d) return;
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a.at(i, c), a.at(i, d));
}

// Clears row t and column t outside the pivot; each pass either finishes or
// moves a strictly smaller remainder into the pivot.
void clear_cross(IntegerMatrix& a, std::size_t t) {
  for (;;) {
    const BigInt p = a.at(t, t);
    for (std::size_t i = t + 1; i < a.rows(); ++i) {
      if (sgn(a.at(i, t)) == 0) continue;
      const BigInt q = a.at(i, t) / p;
      for (std::size_t j = t; j < a.cols(); ++j) a.at(i, j) -= q * a.at(t, j);
    }
    for (std::size_t j = t + 1; j < a.cols(); ++j) {
      if (sgn(a.at(t, j)) == 0) continue;
      const BigInt q = a.at(t, j) / p;
      for (std::size_t i = t; i < a.rows(); ++i) a.at(i, j) -= q * a.at(i, t);
    }
    std::optional<Cell> smaller;
    for (std::size_t i = t + 1; i < a.rows(); ++i)
      if (sgn(a.at(i, t)) != 0 && (!smaller || abs(a.at(i, t)) < abs(a.at(smaller->first, smaller->second))))
        smaller = Cell{i, t};
    for (std::size_t j = t + 1; j < a.cols(); ++j)
      if (sgn(a.at(t, j)) != 0 && (!smaller || abs(a.at(t, j)) < abs(a.at(smaller->first, smaller->second))))
        smaller = Cell{t, j};
    if (!smaller) return;
    swap_rows(a, t, smaller->first);
    swap_cols(a, t, smaller->second);
  }
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  const std::size_t limit = std::min(a.rows(), a.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    auto cell = min_entry(a, t);
    if (!cell) break;
    swap_rows(a, t, cell->first);
    swap_cols(a, t, cell->second);
    clear_cross(a, t);
  }
  const std::size_t rank = t;

  std::vector<BigInt> d(rank);
  for (std::size_t i = 0; i < rank; ++i) d[i] = abs(a.at(i, i));
  // diag(x, y) is equivalent to diag(gcd, lcm); one sweep per position
  // leaves d[i] dividing every later entry.
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) {
      if (d[j] % d[i] == 0) continue;
      BigInt g, l;
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      d[i] = g;
      d[j] = l;
    }

  SmithForm out{IntegerMatrix(m.rows(), m.cols()), rank, d};
  for (std::size_t i = 0; i < rank; ++i) out.diagonal.at(i, i) = d[i];
  return out;
}

}  // namespace numlab::topo
