#include "numlab/topo/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "numlab/errors.hpp"

namespace numlab::topo {

namespace {

void validate(const Simplex& s) {
  if (s.empty() || s.size() > kMaxDimension + 1)
    throw std::invalid_argument("simplex must have 1.." + std::to_string(kMaxDimension + 1) + " vertices");
  if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("simplex vertices must be strictly increasing");
}

}  // namespace

SimplicialComplex SimplicialComplex::face_closure(const std::vector<Simplex>& generators) {
  std::array<std::set<Simplex>, kMaxDimension + 1> sets;
  for (const auto& g : generators) {
    validate(g);
    const std::size_t n = g.size();
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1U) face.push_back(g[i]);
      sets[face.size() - 1].insert(std::move(face));
    }
  }
  SimplicialComplex k;
  for (int d = 0; d <= kMaxDimension; ++d) k.by_dim_[d].assign(sets[d].begin(), sets[d].end());
  return k;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  static const std::vector<Simplex> none;
  if (k < 0 || k > kMaxDimension) return none;
  return by_dim_[static_cast<std::size_t>(k)];
}

std::size_t SimplicialComplex::size() const {
  std::size_t s = 0;
  for (const auto& v : by_dim_) s += v.size();
  return s;
}

int SimplicialComplex::dimension() const {
  for (int d = kMaxDimension; d >= 0; --d)
    if (!by_dim_[d].empty()) return d;
  return -1;
}

std::vector<unsigned> SimplicialComplex::vertices() const {
  std::vector<unsigned> v;
  for (const auto& s : by_dim_[0]) v.push_back(s[0]);
  return v;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > kMaxDimension + 1) return std::nullopt;
  const auto& v = by_dim_[s.size() - 1];
  auto it = std::lower_bound(v.begin(), v.end(), s);
  if (it == v.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_of(s).has_value(); }

std::vector<Simplex> SimplicialComplex::facets() const {
  std::set<Simplex> covered;
  for (int d = 1; d <= kMaxDimension; ++d)
    for (const auto& s : by_dim_[d])
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<long>(drop));
        covered.insert(std::move(f));
      }
  std::vector<Simplex> out;
  for (const auto& level : by_dim_)
    for (const auto& s : level)
      if (!covered.contains(s)) out.push_back(s);
  return out;
}

long euler_characteristic(const SimplicialComplex& k) {
  long chi = 0;
  for (int d = 0; d <= kMaxDimension; ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(k.count(d));
  return chi;
}

SimplicialComplex simplex_boundary(unsigned n) {
  if (n < 1 || n > kMaxDimension + 1) throw std::invalid_argument("simplex_boundary: n must lie in 1..4");
  std::vector<Simplex> faces;
  for (unsigned drop = 0; drop <= n; ++drop) {
    Simplex f;
    for (unsigned v = 0; v <= n; ++v)
      if (v != drop) f.push_back(v);
    faces.push_back(std::move(f));
  }
  return SimplicialComplex::face_closure(faces);
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  const auto va = a.vertices();
  const unsigned shift = va.empty() ? 0 : va.back() + 1;
  std::vector<Simplex> gens = a.facets();
  for (auto s : b.facets()) {
    for (auto& v : s) v += shift;
    gens.push_back(std::move(s));
  }
  return SimplicialComplex::face_closure(gens);
}

SimplicialComplex relabel(const SimplicialComplex& k, const std::vector<unsigned>& map) {
  std::vector<Simplex> gens;
  std::set<unsigned> images;
  for (unsigned v : k.vertices()) {
    if (v >= map.size()) throw std::invalid_argument("relabel: vertex outside the map");
    if (!images.insert(map[v]).second) throw std::invalid_argument("relabel: map is not injective");
  }
  for (auto s : k.facets()) {
    for (auto& v : s) v = map[v];
    std::sort(s.begin(), s.end());
    gens.push_back(std::move(s));
  }
  return SimplicialComplex::face_closure(gens);
}

SimplicialComplex parse_complex(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::vector<Simplex> gens;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    Simplex s;
    std::string tok;
    while (ls >> tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
        throw ParseError("line " + std::to_string(line_no) + ": bad vertex '" + tok + "'", line_no);
      s.push_back(static_cast<unsigned>(std::stoul(tok)));
    }
    if (s.empty()) continue;
    std::sort(s.begin(), s.end());
    try {
      validate(s);
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
    gens.push_back(std::move(s));
  }
  return SimplicialComplex::face_closure(gens);
}

std::string render_complex(const SimplicialComplex& k) {
  std::ostringstream os;
  for (const auto& s : k.facets()) {
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
    os << '\n';
  }
  return os.str();
}

std::vector<Simplex> canonical_form(const SimplicialComplex& k) {
  const auto verts = k.vertices();
  if (verts.size() > kMaxIsomorphismVertices)
    throw GuardViolation("canonical_form: at most " + std::to_string(kMaxIsomorphismVertices) + " vertices");
  const auto facets = k.facets();
  std::map<unsigned, unsigned> pos;
  for (unsigned i = 0; i < verts.size(); ++i) pos[verts[i]] = i;

  std::vector<unsigned> perm(verts.size());
  std::iota(perm.begin(), perm.end(), 0U);
  std::optional<std::vector<Simplex>> best;
  do {
    std::vector<Simplex> image;
    image.reserve(facets.size());
    for (const auto& f : facets) {
      Simplex s;
      for (unsigned v : f) s.push_back(perm[pos[v]]);
      std::sort(s.begin(), s.end());
      image.push_back(std::move(s));
    }
    std::sort(image.begin(), image.end(), [](const Simplex& a, const Simplex& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    if (!best || image < *best) best = std::move(image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best.value_or(std::vector<Simplex>{});
}

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  for (int d = 0; d <= kMaxDimension; ++d)
    if (a.count(d) != b.count(d)) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace numlab::topo
