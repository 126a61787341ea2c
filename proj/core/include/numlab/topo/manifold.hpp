#pragma once

// Combinatorial closed 3-manifold recognition and bounded enumeration of
// complexes generated by tetrahedra.

#include <cstdint>
#include <string>
#include <vector>

#include "numlab/sets.hpp"
#include "numlab/topo/complex.hpp"

namespace numlab::topo {

struct ManifoldCheck {
  bool closed_manifold = false;
  /// The first failing condition, or "closed 3-manifold".
  std::string diagnostic;
};

/// Checks in order: pure of dimension 3, connected, every triangle in exactly
/// two tetrahedra, every edge link a single cycle, every vertex link a
/// connected closed surface of Euler characteristic 2.
ManifoldCheck is_closed_3_manifold(const SimplicialComplex& k);

enum class ComplexFilter { All, ClosedManifold, HomologySphereCandidates };

inline constexpr unsigned kMaxEnumerationVertices = 6;

/// The 4-element subsets of {0..n-1} in lexicographic order; bit i of a
/// complex code selects the i-th of them.
std::vector<Simplex> tetrahedra_on(unsigned n);
/// std::invalid_argument on a code past the available tetrahedra.
SimplicialComplex complex_of_code(unsigned max_vertices, std::uint64_t code);

/// H_0 = H_3 = Z and H_1 = H_2 = 0.
bool has_sphere_homology(const SimplicialComplex& k);
bool passes(const SimplicialComplex& k, ComplexFilter filter);

/// Codes 1, 2, ... of complexes on at most max_vertices labeled vertices
/// that pass `filter`, ascending; one work unit per code examined.
/// GuardViolation above kMaxEnumerationVertices.
sets::Enumerator enumerate_complexes(unsigned max_vertices, ComplexFilter filter);

}  // namespace numlab::topo
