#include "numlab/fourcolor.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "numlab/errors.hpp"

namespace numlab::reductions {

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
    if (u >= n_ || v >= n_) throw std::invalid_argument("graph: edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("graph: repeated edge");
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph Graph::complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, std::move(e));
}

Graph Graph::cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Graph::Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<long long> nums;
    long long x;
    while (ls >> x) nums.push_back(x);
    if (!ls.eof()) throw ParseError("line " + std::to_string(line_no) + ": expected integers", line_no);
    if (nums.empty()) continue;
    if (!n) {
      if (nums.size() != 1 || nums[0] < 0)
        throw ParseError("line " + std::to_string(line_no) + ": expected vertex count", line_no);
      n = static_cast<std::size_t>(nums[0]);
      continue;
    }
    if (nums.size() != 2 || nums[0] < 0 || nums[1] < 0)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'i j'", line_no);
    edges.emplace_back(static_cast<std::size_t>(nums[0]), static_cast<std::size_t>(nums[1]));
  }
  if (!n) throw ParseError("missing vertex count", line_no);
  try {
    return Graph(*n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line_no);
  }
}

std::string render_graph(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Colouring

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (c.colors.size() != g.vertex_count()) return false;
  if (std::any_of(c.colors.begin(), c.colors.end(), [](std::uint8_t x) { return x > 3; })) return false;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Graph::Edge& e) { return c.colors[e.first] != c.colors[e.second]; });
}

std::optional<Coloring> four_colorable(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> earlier(n);  // neighbours with smaller index
  for (const auto& [u, v] : g.edges()) earlier[v].push_back(u);

  Coloring c{std::vector<std::uint8_t>(n, 0)};
  std::vector<int> next(n, 0);
  std::size_t v = 0;
  while (v < n) {
    bool placed = false;
    for (int col = next[v]; col < 4; ++col) {
      bool clash = std::any_of(earlier[v].begin(), earlier[v].end(),
                               [&](std::size_t u) { return c.colors[u] == col; });
      if (!clash) {
        c.colors[v] = static_cast<std::uint8_t>(col);
        next[v] = col + 1;
        placed = true;
        break;
      }
    }
    if (placed) {
      ++v;
      continue;
    }
    next[v] = 0;
    if (v == 0) return std::nullopt;
    --v;
  }
  if (!is_proper_coloring(g, c)) throw std::logic_error("four_colorable produced an improper colouring");
  return c;
}

// ---------------------------------------------------------------------------
// Planarity by minor search

namespace {

// Adjacency-bitmask graph on at most 8 vertices.
struct SmallGraph {
  std::size_t n = 0;
  std::array<std::uint8_t, 8> adj{};

  std::size_t degree(std::size_t v) const { return static_cast<std::size_t>(std::popcount(adj[v])); }

  std::size_t edge_count() const {
    std::size_t s = 0;
    for (std::size_t v = 0; v < n; ++v) s += degree(v);
    return s / 2;
  }

  void remove_edge(std::size_t u, std::size_t v) {
    adj[u] &= static_cast<std::uint8_t>(~(1U << v));
    adj[v] &= static_cast<std::uint8_t>(~(1U << u));
  }

  // Deletes vertex v (which must be isolated or have its edges dropped) and
  // shifts higher labels down by one.
  void delete_vertex(std::size_t v) {
    for (std::size_t u = 0; u < n; ++u) {
      std::uint8_t a = adj[u] & static_cast<std::uint8_t>(~(1U << v));
      std::uint8_t low = a & static_cast<std::uint8_t>((1U << v) - 1);
      std::uint8_t high = static_cast<std::uint8_t>((a >> (v + 1)) << v);
      adj[u] = low | high;
    }
    for (std::size_t u = v; u + 1 < n; ++u) adj[u] = adj[u + 1];
    adj[n - 1] = 0;
    --n;
  }

  // Contracts edge (u, v) into u, then deletes v.
  void contract(std::size_t u, std::size_t v) {
    std::uint8_t nb = adj[v];
    for (std::size_t w = 0; w < n; ++w)
      if ((nb >> w) & 1U) remove_edge(v, w);
    nb &= static_cast<std::uint8_t>(~(1U << u));
    for (std::size_t w = 0; w < n; ++w)
      if ((nb >> w) & 1U) {
        adj[u] |= static_cast<std::uint8_t>(1U << w);
        adj[w] |= static_cast<std::uint8_t>(1U << u);
      }
    delete_vertex(v);
  }

  std::uint32_t key() const {
    std::uint32_t mask = 0;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++bit)
        if ((adj[i] >> j) & 1U) mask |= 1U << bit;
    return mask | static_cast<std::uint32_t>(n) << 28;
  }
};

// Deletes degree-0 and degree-1 vertices and suppresses degree-2 vertices.
// None of these moves can create or destroy a minor whose vertices all have
// degree at least 3, which covers both K5 and K3,3.
void reduce(SmallGraph& g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < g.n; ++v) {
      const std::size_t d = g.degree(v);
      if (d <= 1) {
        if (d == 1) g.remove_edge(v, static_cast<std::size_t>(std::countr_zero(g.adj[v])));
        g.delete_vertex(v);
        changed = true;
        break;
      }
      if (d == 2) {
        const auto a = static_cast<std::size_t>(std::countr_zero(g.adj[v]));
        g.contract(a, v);
        changed = true;
        break;
      }
    }
  }
}

bool contains_k5_or_k33_subgraph(const SmallGraph& g) {
  const std::size_t n = g.n;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    const int size = std::popcount(s);
    if (size == 5) {
      bool complete = true;
      for (std::size_t v = 0; v < n && complete; ++v)
        if ((s >> v) & 1U) complete = (g.adj[v] & s) == (s & ~(1U << v));
      if (complete) return true;
    } else if (size == 6) {
      // split s into sides A (containing the lowest vertex) and B = s \ A
      const std::uint32_t low = s & (~s + 1);
      for (std::uint32_t a = s; a; a = (a - 1) & s) {
        if (!(a & low) || std::popcount(a) != 3) continue;
        const std::uint32_t b = s & ~a;
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v)
          if ((a >> v) & 1U) ok = (g.adj[v] & b) == b;
        if (ok) return true;
      }
    }
  }
  return false;
}

using MinorMemo = std::unordered_map<std::uint32_t, bool>;

bool has_forbidden_minor(SmallGraph g, MinorMemo& memo) {
  reduce(g);
  if (g.n < 5) return false;
  const std::size_t e = g.edge_count();
  if (e > 3 * g.n - 6) return true;  // Euler bound: not planar
  const std::uint32_t key = g.key();
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  bool found = contains_k5_or_k33_subgraph(g);
  for (std::size_t u = 0; u < g.n && !found; ++u)
    for (std::size_t v = u + 1; v < g.n && !found; ++v) {
      if (!((g.adj[u] >> v) & 1U)) continue;
      SmallGraph del = g;
      del.remove_edge(u, v);
      if (has_forbidden_minor(del, memo)) {
        found = true;
        break;
      }
      SmallGraph con = g;
      con.contract(u, v);
      found = has_forbidden_minor(con, memo);
    }
  memo.emplace(key, found);
  return found;
}

MinorMemo& thread_memo() {
  thread_local MinorMemo memo;
  return memo;
}

SmallGraph to_small(const Graph& g) {
  SmallGraph s;
  s.n = g.vertex_count();
  for (const auto& [u, v] : g.edges()) {
    s.adj[u] |= static_cast<std::uint8_t>(1U << v);
    s.adj[v] |= static_cast<std::uint8_t>(1U << u);
  }
  return s;
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace

bool is_planar(const Graph& g) {
  if (g.vertex_count() > kMaxPlanarityVertices)
    throw GuardViolation("is_planar: at most " + std::to_string(kMaxPlanarityVertices) + " vertices");
  return !has_forbidden_minor(to_small(g), thread_memo());
}

std::uint64_t graph_mask(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::uint64_t mask = 0;
  for (const auto& [u, v] : g.edges()) {
    // index of (u, v) among lexicographically ordered pairs
    std::size_t idx = u * n - u * (u + 1) / 2 + (v - u - 1);
    mask |= std::uint64_t{1} << idx;
  }
  return mask;
}

Graph graph_of_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Graph::Edge> e;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1U) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

std::uint64_t canonical_mask(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxPlanarityVertices)
    throw GuardViolation("canonical_mask: at most " + std::to_string(kMaxPlanarityVertices) + " vertices");
  std::array<std::array<std::size_t, 8>, 8> bit{};
  for (std::size_t i = 0, b = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++b) bit[i][j] = bit[j][i] = b;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = UINT64_MAX;
  do {
    std::uint64_t m = 0;
    for (const auto& [u, v] : g.edges()) m |= std::uint64_t{1} << bit[perm[u]][perm[v]];
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

SmallGraph small_of_mask(std::size_t n, std::uint64_t mask) {
  SmallGraph s;
  s.n = n;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1U) {
        s.adj[i] |= static_cast<std::uint8_t>(1U << j);
        s.adj[j] |= static_cast<std::uint8_t>(1U << i);
      }
  return s;
}

bool planar_mask(std::size_t n, std::uint64_t mask) { return !has_forbidden_minor(small_of_mask(n, mask), thread_memo()); }

}  // namespace

std::vector<Graph> enumerate_planar_graphs(std::size_t n, bool dedup) {
  if (n > kMaxEnumerationVertices)
    throw GuardViolation("enumerate_planar_graphs: at most " + std::to_string(kMaxEnumerationVertices) +
                         " vertices");
  if (dedup && n > kMaxDedupVertices)
    throw GuardViolation("enumerate_planar_graphs: isomorphism dedup limited to " +
                         std::to_string(kMaxDedupVertices) + " vertices");
  std::vector<Graph> out;
  std::set<std::uint64_t> classes;
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (!planar_mask(n, mask)) continue;
    Graph g = graph_of_mask(n, mask);
    if (dedup && !classes.insert(canonical_mask(g)).second) continue;
    out.push_back(std::move(g));
  }
  return out;
}

bool p_of_n(std::size_t n) {
  if (n > kMaxEnumerationVertices)
    throw GuardViolation("P(n): at most " + std::to_string(kMaxEnumerationVertices) + " regions");
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (planar_mask(n, mask) && !four_colorable(graph_of_mask(n, mask))) return false;
  return true;
}

namespace {

class CounterexampleSource final : public sets::EnumeratorSource {
 public:
  explicit CounterexampleSource(std::size_t max_n) : max_n_(max_n) {}

  sets::PullResult pull(std::uint64_t budget) override {
    sets::PullResult r;
    while (r.work < budget) {
      if (next_ > max_n_) {
        r.status = sets::PullStatus::Exhausted;
        return r;
      }
      const std::size_t n = next_++;
      ++r.work;
      if (!p_of_n(n)) {
        r.status = sets::PullStatus::Item;
        r.item = n;
        return r;
      }
    }
    r.status = next_ > max_n_ ? sets::PullStatus::Exhausted : sets::PullStatus::BudgetExceeded;
    return r;
  }

 private:
  std::size_t max_n_;
  std::size_t next_ = 0;
};

}  // namespace

sets::Enumerator fourcolor_counterexample_enumerator(std::size_t max_n) {
  if (max_n > kMaxEnumerationVertices)
    throw GuardViolation("counterexample enumerator: max_n at most " + std::to_string(kMaxEnumerationVertices));
  return sets::Enumerator(std::make_unique<CounterexampleSource>(max_n));
}

}  // namespace numlab::reductions
