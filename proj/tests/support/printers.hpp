#pragma once

// gtest printers, so failed comparisons show polynomials instead of bytes.

#include <ostream>

#include "numlab/numbers/unipoly.hpp"

namespace numlab::numbers {

inline void PrintTo(const UniPolynomial& p, std::ostream* os) { *os << render(p); }

}  // namespace numlab::numbers
