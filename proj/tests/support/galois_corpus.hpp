#pragma once

// Irreducible polynomials of degree <= 4 covering all nine transitive groups,
// with the group each one is expected to have.

#include <vector>

#include "numlab/numbers/galois.hpp"

namespace numlab::testing {

struct GroupCase {
  const char* poly;
  numbers::GroupName group;
};

inline const std::vector<GroupCase>& galois_corpus() {
  using numbers::GroupName;
  static const std::vector<GroupCase> corpus{
      {"x - 3", GroupName::C1},
      {"2*x + 1", GroupName::C1},
      {"x^2 - 5", GroupName::C2},
      {"x^2 + 1", GroupName::C2},
      {"4*x^2 + 2*x - 1", GroupName::C2},
      {"x^3 - 2", GroupName::S3},
      {"x^3 - x - 1", GroupName::S3},
      {"x^3 - 3*x - 1", GroupName::C3},
      {"x^3 - x^2 - 2*x + 1", GroupName::C3},
      {"x^4 + 1", GroupName::V4},
      {"x^4 - 10*x^2 + 1", GroupName::V4},
      {"x^4 + x^3 + x^2 + x + 1", GroupName::C4},
      {"x^4 + 5*x + 5", GroupName::C4},
      {"x^4 - 4*x^2 + 2", GroupName::C4},
      {"x^4 - 2", GroupName::D4},
      {"x^4 + 3", GroupName::D4},
      {"x^4 - x - 1", GroupName::S4},
      {"x^4 + 2*x + 2", GroupName::S4},
      {"x^4 + 8*x + 12", GroupName::A4},
      {"x^4 - 2*x^3 + 2*x^2 + 2", GroupName::A4},
  };
  return corpus;
}

}  // namespace numlab::testing
