#include "numlab/topo/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "numlab/errors.hpp"

namespace numlab::topo {

IntegerMatrix boundary_matrix(const SimplicialComplex& k, int dim) {
  if (dim < 1 || dim > kMaxDimension) throw std::invalid_argument("boundary_matrix: dimension must lie in 1..3");
  const auto& lower = k.simplices(dim - 1);
  const auto& upper = k.simplices(dim);
  IntegerMatrix m(lower.size(), upper.size());
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const Simplex& s = upper[c];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(i));
      m.at(*k.index_of(face), c) = (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

std::string render(const AbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::string out;
  if (g.rank > 0) out = g.rank == 1 ? "Z" : "Z^" + std::to_string(g.rank);
  for (const auto& t : g.torsion) out += (out.empty() ? "" : " + ") + std::string("Z/") + t.get_str();
  return out;
}

HomologyResult homology(const SimplicialComplex& k) {
  // rank of d_j for j = 1..3; d_0 and d_4 vanish
  std::array<std::size_t, kMaxDimension + 2> rank{};
  std::array<std::vector<BigInt>, kMaxDimension + 2> factors{};
  for (int j = 1; j <= kMaxDimension; ++j) {
    SmithForm s = smith_normal_form(boundary_matrix(k, j));
    rank[static_cast<std::size_t>(j)] = s.rank;
    factors[static_cast<std::size_t>(j)] = std::move(s.invariant_factors);
  }
  HomologyResult h;
  for (std::size_t d = 0; d <= kMaxDimension; ++d) {
    AbelianGroup& g = h.groups[d];
    g.rank = k.count(static_cast<int>(d)) - rank[d] - rank[d + 1];
    for (const auto& f : factors[d + 1])
      if (f > 1) g.torsion.push_back(f);
  }
  return h;
}

std::string render(const Presentation& p) {
  std::ostringstream os;
  os << '<';
  for (std::size_t g = 1; g <= p.generator_count; ++g) os << (g > 1 ? ", " : "") << 'a' << g;
  os << " | ";
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    if (r) os << ", ";
    const auto& rel = p.relators[r];
    for (std::size_t i = 0; i < rel.size(); ++i) {
      if (i) os << ' ';
      os << 'a' << std::abs(rel[i]);
      if (rel[i] < 0) os << "^-1";
    }
  }
  os << '>';
  return os.str();
}

namespace {

using Edge = std::pair<unsigned, unsigned>;

std::map<unsigned, std::vector<unsigned>> adjacency(const SimplicialComplex& k) {
  std::map<unsigned, std::vector<unsigned>> adj;
  for (unsigned v : k.vertices()) adj[v];
  for (const auto& e : k.simplices(1)) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

// Breadth-first spanning tree from the least vertex; returns tree edges and
// the set of vertices reached.
std::pair<std::set<Edge>, std::set<unsigned>> spanning_tree(const SimplicialComplex& k) {
  std::set<Edge> tree;
  std::set<unsigned> seen;
  const auto verts = k.vertices();
  if (verts.empty()) return {tree, seen};
  const auto adj = adjacency(k);
  std::deque<unsigned> queue{verts.front()};
  seen.insert(verts.front());
  while (!queue.empty()) {
    const unsigned v = queue.front();
    queue.pop_front();
    for (unsigned w : adj.at(v)) {
      if (!seen.insert(w).second) continue;
      tree.insert({std::min(v, w), std::max(v, w)});
      queue.push_back(w);
    }
  }
  return {tree, seen};
}

std::vector<int> free_reduce(const std::vector<int>& word) {
  std::vector<int> out;
  for (int x : word) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  // cyclic reduction
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
    ++lo;
    --hi;
  }
  return {out.begin() + static_cast<long>(lo), out.begin() + static_cast<long>(hi)};
}

}  // namespace

bool is_connected(const SimplicialComplex& k) {
  const auto verts = k.vertices();
  return !verts.empty() && spanning_tree(k).second.size() == verts.size();
}

Presentation fundamental_group_presentation(const SimplicialComplex& k) {
  auto [tree, seen] = spanning_tree(k);
  if (k.vertices().empty() || seen.size() != k.vertices().size())
    throw DomainError("fundamental group needs a connected nonempty complex");
  std::map<Edge, int> gen;
  for (const auto& e : k.simplices(1)) {
    Edge edge{e[0], e[1]};
    if (!tree.contains(edge)) gen.emplace(edge, static_cast<int>(gen.size()) + 1);
  }
  Presentation p;
  p.generator_count = gen.size();
  for (const auto& t : k.simplices(2)) {
    std::vector<int> word;
    auto letter = [&](unsigned a, unsigned b, int sign) {
      if (auto it = gen.find({a, b}); it != gen.end()) word.push_back(sign * it->second);
    };
    letter(t[0], t[1], 1);
    letter(t[1], t[2], 1);
    letter(t[0], t[2], -1);
    auto reduced = free_reduce(word);
    if (!reduced.empty()) p.relators.push_back(std::move(reduced));
  }
  return p;
}

AbelianGroup abelianization(const Presentation& p) {
  IntegerMatrix m(p.relators.size(), p.generator_count);
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int x : p.relators[r]) {
      const auto g = static_cast<std::size_t>(std::abs(x) - 1);
      if (g >= p.generator_count) throw std::invalid_argument("relator mentions an unknown generator");
      m.at(r, g) += x > 0 ? 1 : -1;
    }
  SmithForm s = smith_normal_form(m);
  AbelianGroup g;
  g.rank = p.generator_count - s.rank;
  for (const auto& f : s.invariant_factors)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

}  // namespace numlab::topo
