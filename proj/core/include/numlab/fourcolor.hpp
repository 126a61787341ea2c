#pragma once

// Maps as adjacency graphs, the four-colour predicate P(n) and its
// counterexample set as a listable set.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numlab/sets.hpp"

namespace numlab::reductions {

/// Simple undirected graph on vertices 0..vertex_count-1.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph() = default;
  /// Normalizes each edge to (min, max) and sorts. Throws std::invalid_argument
  /// on loops, repeated edges or out-of-range endpoints.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  static Graph complete(std::size_t n);
  static Graph complete_bipartite(std::size_t a, std::size_t b);
  static Graph cycle(std::size_t n);

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const;

  bool operator==(const Graph&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Parses "n\n i j\n i j ..." ; ParseError::where() is the 1-based line.
Graph parse_graph(std::string_view text);
std::string render_graph(const Graph& g);

/// Colours 0..3; colors[v] is the colour of vertex v.
struct Coloring {
  std::vector<std::uint8_t> colors;
  bool operator==(const Coloring&) const = default;
};

bool is_proper_coloring(const Graph& g, const Coloring& c);

/// Backtracking in vertex order, trying colours 0..3; returns the first proper
/// colouring found (verified before returning), or nullopt if none exists.
std::optional<Coloring> four_colorable(const Graph& g);

inline constexpr std::size_t kMaxPlanarityVertices = 8;
inline constexpr std::size_t kMaxEnumerationVertices = 7;
inline constexpr std::size_t kMaxDedupVertices = 6;

/// Wagner test: no K5 and no K3,3 minor, decided by memoized search over
/// single-edge deletions and contractions. GuardViolation above 8 vertices.
bool is_planar(const Graph& g);

/// Labeled simple graphs on n vertices, edge set read as a bitmask over the
/// lexicographically ordered vertex pairs ((0,1) is bit 0), ascending.
std::uint64_t graph_mask(const Graph& g);
Graph graph_of_mask(std::size_t n, std::uint64_t mask);

/// All planar labeled graphs on n vertices in ascending mask order. With
/// `dedup`, only the first member of each isomorphism class is kept (n <= 6).
std::vector<Graph> enumerate_planar_graphs(std::size_t n, bool dedup = false);

/// Lexicographically least adjacency mask over all vertex relabelings.
std::uint64_t canonical_mask(const Graph& g);

/// P(n): every planar graph on n vertices is four-colourable. n <= 7.
bool p_of_n(std::size_t n);

/// Emits each n <= max_n with P(n) false; one work unit per n decided.
sets::Enumerator fourcolor_counterexample_enumerator(std::size_t max_n);

}  // namespace numlab::reductions
