#pragma once

// Integer matrices and their Smith normal form.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "numlab/bigint.hpp"

namespace numlab::topo {

/// Row-major integer matrix.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  /// std::invalid_argument on ragged rows.
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  const std::vector<BigInt>& entries() const noexcept { return e_; }
  bool is_zero() const;

  IntegerMatrix operator*(const IntegerMatrix& o) const;
  bool operator==(const IntegerMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> e_;
};

std::string render(const IntegerMatrix& m);

struct SmithForm {
  IntegerMatrix diagonal;                // same shape as the input
  std::size_t rank = 0;
  std::vector<BigInt> invariant_factors;  // positive, each dividing the next
};

/// Unimodular row and column reduction pivoting on a nonzero entry of least
/// absolute value, followed by gcd/lcm exchanges along the diagonal.
SmithForm smith_normal_form(const IntegerMatrix& m);

}  // namespace numlab::topo
