#include "numlab/topo/manifold.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "numlab/errors.hpp"
#include "numlab/topo/homology.hpp"

namespace numlab::topo {

namespace {

std::string show(const Simplex& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

Simplex with(Simplex s, unsigned v) {
  s.insert(std::upper_bound(s.begin(), s.end(), v), v);
  return s;
}

// Every simplex lies in some tetrahedron.
bool pure_3d(const SimplicialComplex& k) {
  if (k.dimension() != 3) return false;
  std::set<Simplex> covered;
  for (const auto& t : k.simplices(3))
    for (std::uint32_t mask = 1; mask < 15; ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < 4; ++i)
        if ((mask >> i) & 1U) f.push_back(t[i]);
      covered.insert(std::move(f));
    }
  return covered.size() + k.count(3) == k.size();
}

// Graph on `verts` with `edges` is one cycle through all of them.
bool single_cycle(const std::vector<unsigned>& verts, const std::vector<std::pair<unsigned, unsigned>>& edges) {
  if (verts.size() < 3 || edges.size() != verts.size()) return false;
  std::map<unsigned, std::vector<unsigned>> adj;
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (unsigned v : verts)
    if (adj[v].size() != 2) return false;
  // walk the cycle from the first vertex
  std::size_t steps = 0;
  unsigned prev = verts.front(), cur = adj[prev].front();
  while (cur != verts.front()) {
    const auto& nb = adj[cur];
    const unsigned next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    if (++steps > verts.size()) return false;
  }
  return steps + 1 == verts.size();
}

SimplicialComplex vertex_link(const SimplicialComplex& k, unsigned v) {
  std::vector<Simplex> gens;
  for (int d = 1; d <= kMaxDimension; ++d)
    for (const auto& s : k.simplices(d))
      if (std::binary_search(s.begin(), s.end(), v)) {
        Simplex r;
        for (unsigned w : s)
          if (w != v) r.push_back(w);
        gens.push_back(std::move(r));
      }
  return SimplicialComplex::face_closure(gens);
}

bool closed_surface(const SimplicialComplex& s) {
  if (s.dimension() != 2 || !is_connected(s)) return false;
  std::map<Simplex, int> edge_use;
  for (const auto& t : s.simplices(2))
    for (std::size_t drop = 0; drop < 3; ++drop) {
      Simplex e = t;
      e.erase(e.begin() + static_cast<long>(drop));
      ++edge_use[e];
    }
  if (edge_use.size() != s.count(1)) return false;  // an edge outside every triangle
  return std::all_of(edge_use.begin(), edge_use.end(), [](const auto& kv) { return kv.second == 2; });
}

}  // namespace

ManifoldCheck is_closed_3_manifold(const SimplicialComplex& k) {
  if (!pure_3d(k)) return {false, "not pure 3-dimensional"};
  if (!is_connected(k)) return {false, "not connected"};

  std::map<Simplex, int> tri_use;
  for (const auto& t : k.simplices(3))
    for (std::size_t drop = 0; drop < 4; ++drop) {
      Simplex f = t;
      f.erase(f.begin() + static_cast<long>(drop));
      ++tri_use[f];
    }
  for (const auto& tri : k.simplices(2)) {
    const int uses = tri_use[tri];
    if (uses != 2)
      return {false, "triangle " + show(tri) + " lies in " + std::to_string(uses) + " tetrahedra"};
  }

  for (const auto& e : k.simplices(1)) {
    std::vector<unsigned> verts;
    std::vector<std::pair<unsigned, unsigned>> edges;
    for (unsigned w : k.vertices())
      if (!std::binary_search(e.begin(), e.end(), w) && k.contains(with(e, w))) verts.push_back(w);
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (k.contains(with(with(e, verts[i]), verts[j]))) edges.emplace_back(verts[i], verts[j]);
    if (!single_cycle(verts, edges)) return {false, "link of edge " + show(e) + " is not a single cycle"};
  }

  for (unsigned v : k.vertices()) {
    const SimplicialComplex link = vertex_link(k, v);
    if (!closed_surface(link) || euler_characteristic(link) != 2)
      return {false, "link of vertex " + std::to_string(v) + " is not a 2-sphere"};
  }
  return {true, "closed 3-manifold"};
}

std::vector<Simplex> tetrahedra_on(unsigned n) {
  std::vector<Simplex> out;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b)
      for (unsigned c = b + 1; c < n; ++c)
        for (unsigned d = c + 1; d < n; ++d) out.push_back({a, b, c, d});
  return out;
}

SimplicialComplex complex_of_code(unsigned max_vertices, std::uint64_t code) {
  const auto tets = tetrahedra_on(max_vertices);
  if (tets.size() < 64 && (code >> tets.size()) != 0)
    throw std::invalid_argument("complex code uses more than " + std::to_string(tets.size()) + " tetrahedra");
  std::vector<Simplex> gens;
  for (std::size_t i = 0; i < tets.size(); ++i)
    if ((code >> i) & 1U) gens.push_back(tets[i]);
  return SimplicialComplex::face_closure(gens);
}

bool has_sphere_homology(const SimplicialComplex& k) {
  const HomologyResult h = homology(k);
  const AbelianGroup z{1, {}};
  return h[0] == z && h[1].is_trivial() && h[2].is_trivial() && h[3] == z;
}

bool passes(const SimplicialComplex& k, ComplexFilter filter) {
  switch (filter) {
    case ComplexFilter::All: return true;
    case ComplexFilter::ClosedManifold: return is_closed_3_manifold(k).closed_manifold;
    case ComplexFilter::HomologySphereCandidates:
      return is_closed_3_manifold(k).closed_manifold && has_sphere_homology(k);
  }
  return false;
}

namespace {

class ComplexSource final : public sets::EnumeratorSource {
 public:
  ComplexSource(unsigned n, ComplexFilter filter)
      : n_(n), filter_(filter), end_(std::uint64_t{1} << tetrahedra_on(n).size()) {}

  sets::PullResult pull(sets::Natural budget) override {
    sets::PullResult r;
    while (r.work < budget) {
      if (next_ >= end_) {
        r.status = sets::PullStatus::Exhausted;
        return r;
      }
      const std::uint64_t code = next_++;
      ++r.work;
      if (passes(complex_of_code(n_, code), filter_)) {
        r.status = sets::PullStatus::Item;
        r.item = code;
        return r;
      }
    }
    r.status = next_ >= end_ ? sets::PullStatus::Exhausted : sets::PullStatus::BudgetExceeded;
    return r;
  }

 private:
  unsigned n_;
  ComplexFilter filter_;
  std::uint64_t end_;
  std::uint64_t next_ = 1;  // the empty complex is not emitted
};

}  // namespace

sets::Enumerator enumerate_complexes(unsigned max_vertices, ComplexFilter filter) {
  if (max_vertices > kMaxEnumerationVertices)
    throw GuardViolation("enumerate_complexes: at most " + std::to_string(kMaxEnumerationVertices) + " vertices");
  return sets::Enumerator(std::make_unique<ComplexSource>(max_vertices, filter));
}

}  // namespace numlab::topo
