#pragma once

// Independent reference implementations. None of these call the library
// routine they check; they share only the data types.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "numlab/bigint.hpp"
#include "numlab/dioph.hpp"
#include "numlab/fourcolor.hpp"
#include "numlab/numbers/unipoly.hpp"
#include "numlab/topo/complex.hpp"
#include "numlab/topo/smith.hpp"

namespace numlab::oracle {

// Galois group of an irreducible integer polynomial of degree <= 4, found
// numerically: the least subgroup H of S_n for which prod over H of
// (x - sum c_i r_sigma(i)) has integer coefficients.
struct SplittingInfo {
  unsigned order = 0;  // degree of the splitting field
  bool abelian = false;
  bool cyclic = false;
};
SplittingInfo splitting_degree(const numbers::UniPolynomial& p);

// Kronecker's method: factor a primitive integer polynomial into irreducibles
// (with multiplicity), each with positive leading coefficient, sorted by
// degree then coefficients.
std::vector<numbers::UniPolynomial> kronecker_factor(const numbers::UniPolynomial& p);

// Nested loops over [0, bound]^n with machine-word evaluation; least witness
// in lexicographic order.
std::optional<std::vector<std::uint64_t>> box_solve(const dioph::DiophantineFamily& fam, std::uint64_t t,
                                                    std::uint64_t bound);

// Boyer-Myrvold planarity (Boost.Graph).
bool boost_planar(const reductions::Graph& g);

// Exhaustive search over all 4^n colourings.
bool brute_four_colorable(const reductions::Graph& g);

// Invariant factors from determinantal divisors: d_k = gcd of all k x k minors.
std::vector<BigInt> invariant_factors_by_minors(const topo::IntegerMatrix& m);

// Betti numbers from ranks over Q.
std::vector<std::size_t> betti_over_q(const topo::SimplicialComplex& k);

// MIU theorems by string rewriting written out directly.
std::set<std::string> miu_bfs(std::size_t depth, std::size_t length_cap);

// Labeled planar graphs on n vertices counted with the Boost test.
std::uint64_t count_planar_labeled(std::size_t n);

}  // namespace numlab::oracle
