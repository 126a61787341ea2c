#pragma once

// Finite simplicial complexes of dimension at most 3.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace numlab::topo {

/// Strictly increasing vertex labels, 1..4 of them.
using Simplex = std::vector<unsigned>;

inline constexpr int kMaxDimension = 3;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Smallest complex containing every given simplex. std::invalid_argument
  /// on an empty, over-long or non-increasing tuple.
  static SimplicialComplex face_closure(const std::vector<Simplex>& generators);

  /// Simplices of dimension k in lexicographic order; empty outside 0..3.
  const std::vector<Simplex>& simplices(int k) const;
  std::size_t count(int k) const { return simplices(k).size(); }
  std::size_t size() const;
  /// -1 for the empty complex.
  int dimension() const;
  std::vector<unsigned> vertices() const;
  bool contains(const Simplex& s) const;
  /// Position of s in simplices(dim s), if present.
  std::optional<std::size_t> index_of(const Simplex& s) const;
  /// Simplices that are faces of no other simplex, by dimension then lexicographically.
  std::vector<Simplex> facets() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::array<std::vector<Simplex>, kMaxDimension + 1> by_dim_;
};

long euler_characteristic(const SimplicialComplex& k);

/// Boundary of the standard n-simplex on vertices 0..n (a sphere of dimension n-1); 1 <= n <= 4.
SimplicialComplex simplex_boundary(unsigned n);
/// Copy of `b` relabeled past the vertices of `a`, joined to `a`.
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);
/// Applies a vertex relabeling (which must be injective on the vertices of k).
SimplicialComplex relabel(const SimplicialComplex& k, const std::vector<unsigned>& map);

/// Lines of generating simplices as space-separated vertex indices, any
/// order within a line; `#` starts a comment. ParseError::where() is the line.
SimplicialComplex parse_complex(std::string_view text);
/// One facet per line.
std::string render_complex(const SimplicialComplex& k);

/// Lexicographically least facet list over all relabelings onto 0..v-1,
/// for complexes with at most kMaxIsomorphismVertices vertices.
inline constexpr std::size_t kMaxIsomorphismVertices = 8;
std::vector<Simplex> canonical_form(const SimplicialComplex& k);
bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace numlab::topo
