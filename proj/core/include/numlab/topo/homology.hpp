#pragma once

// Simplicial homology over the integers and edge-path presentations of the
// fundamental group.

#include <array>
#include <string>
#include <vector>

#include "numlab/topo/complex.hpp"
#include "numlab/topo/smith.hpp"

namespace numlab::topo {

/// Matrix of the boundary map from k-chains to (k-1)-chains, k in 1..3.
/// Rows are (k-1)-simplices and columns k-simplices, both lexicographic;
/// deleting the i-th vertex of a simplex carries sign (-1)^i.
/// std::invalid_argument outside 1..3.
IntegerMatrix boundary_matrix(const SimplicialComplex& k, int dim);

/// Z^rank plus the cyclic groups Z/t for t in torsion (each dividing the next).
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup&) const = default;
};

/// "0", "Z", "Z^2", "Z/2", "Z + Z/2 + Z/4", ...
std::string render(const AbelianGroup& g);

struct HomologyResult {
  std::array<AbelianGroup, 4> groups;  // H_0 .. H_3

  const AbelianGroup& operator[](std::size_t k) const { return groups.at(k); }
  bool operator==(const HomologyResult&) const = default;
};

HomologyResult homology(const SimplicialComplex& k);

/// Generators are 1-based; -g denotes the inverse of generator g.
struct Presentation {
  std::size_t generator_count = 0;
  std::vector<std::vector<int>> relators;

  bool operator==(const Presentation&) const = default;
};

/// "<a1, a2 | a1 a2 a1^-1 a2^-1>"
std::string render(const Presentation& p);

/// Edge-path group based at the least vertex: breadth-first spanning tree
/// (neighbours in increasing order), one generator per non-tree edge in
/// lexicographic order, one relator per triangle (a,b,c) spelling
/// ab.bc.(ac)^-1 with tree edges dropped, then freely and cyclically
/// reduced; empty relators are removed. DomainError unless connected.
Presentation fundamental_group_presentation(const SimplicialComplex& k);

/// Abelian group with the same generators and the relators made commutative,
/// read off the Smith form of the exponent-sum matrix.
AbelianGroup abelianization(const Presentation& p);

bool is_connected(const SimplicialComplex& k);

}  // namespace numlab::topo
