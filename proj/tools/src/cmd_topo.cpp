#include "context.hpp"
#include "numlab/topo/homology.hpp"
#include "numlab/topo/manifold.hpp"

namespace numlab::cli {

namespace {

using topo::SimplicialComplex;

SimplicialComplex load(const std::string& file) { return topo::parse_complex(read_file(file)); }

std::vector<std::string> strings(const std::vector<BigInt>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

// "2 4; 6 8"
topo::IntegerMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<BigInt>> rows;
  std::size_t start = 0;
  for (;;) {
    const std::size_t semi = text.find(';', start);
    std::istringstream row(text.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
    std::vector<BigInt> r;
    std::string tok;
    while (row >> tok) {
      BigInt v;
      if (v.set_str(tok, 10) != 0) throw UsageError("bad matrix entry '" + tok + "'");
      r.push_back(v);
    }
    rows.push_back(std::move(r));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (rows.empty() || rows[0].empty()) throw UsageError("empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw UsageError("matrix rows differ in length");
  topo::IntegerMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

topo::ComplexFilter parse_filter(const std::string& name) {
  if (name == "all") return topo::ComplexFilter::All;
  if (name == "closed-manifold") return topo::ComplexFilter::ClosedManifold;
  if (name == "homology-sphere") return topo::ComplexFilter::HomologySphereCandidates;
  throw UsageError("unknown filter '" + name + "'");
}

}  // namespace

void register_topo(CLI::App& app, Context& ctx) {
  auto* topo_cmd = app.add_subcommand("topo", "Simplicial complexes, homology and fundamental groups");
  topo_cmd->require_subcommand(1);

  auto homology_file = std::make_shared<std::string>();
  auto* homology = topo_cmd->add_subcommand("homology", "Integral homology H_0..H_3");
  homology->add_option("file", *homology_file, "Complex file")->required();
  add_json_flag(homology, ctx);
  homology->callback([&ctx, homology_file] {
    const auto k = load(*homology_file);
    const auto h = topo::homology(k);
    ctx.begin("topo homology");
    if (ctx.json) {
      nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
      for (std::size_t d = 0; d < h.groups.size(); ++d)
        degrees.push_back({{"degree", d}, {"betti", h[d].rank}, {"torsion", strings(h[d].torsion)}});
      ctx.doc["degrees"] = degrees;
      return;
    }
    for (std::size_t d = 0; d < h.groups.size(); ++d) ctx.out << "H" << d << " = " << topo::render(h[d]) << '\n';
  });

  auto pi1_file = std::make_shared<std::string>();
  auto* pi1 = topo_cmd->add_subcommand("pi1", "Edge-path presentation of the fundamental group");
  pi1->add_option("file", *pi1_file, "Complex file")->required();
  add_json_flag(pi1, ctx);
  pi1->callback([&ctx, pi1_file] {
    const auto k = load(*pi1_file);
    const auto p = topo::fundamental_group_presentation(k);
    const auto ab = topo::abelianization(p);
    ctx.begin("topo pi1");
    if (ctx.json) {
      ctx.doc["generators"] = p.generator_count;
      ctx.doc["relators"] = p.relators;
      ctx.doc["presentation"] = topo::render(p);
      ctx.doc["abelianization"] = topo::render(ab);
      return;
    }
    ctx.out << topo::render(p) << '\n' << "abelianization = " << topo::render(ab) << '\n';
  });

  auto euler_file = std::make_shared<std::string>();
  auto* euler = topo_cmd->add_subcommand("euler", "Simplex counts and Euler characteristic");
  euler->add_option("file", *euler_file, "Complex file")->required();
  add_json_flag(euler, ctx);
  euler->callback([&ctx, euler_file] {
    const auto k = load(*euler_file);
    const long chi = topo::euler_characteristic(k);
    ctx.begin("topo euler");
    std::vector<std::size_t> counts;
    for (int d = 0; d <= topo::kMaxDimension; ++d) counts.push_back(k.count(d));
    if (ctx.json) {
      ctx.doc["counts"] = counts;
      ctx.doc["euler_characteristic"] = chi;
      return;
    }
    ctx.out << "counts = " << join_numbers(counts) << '\n' << "chi = " << chi << '\n';
  });

  struct EnumArgs {
    unsigned max_vertices = 5;
    std::string filter = "closed-manifold";
    std::size_t count = 10;
    std::uint64_t budget = 100000;
  };
  auto ea = std::make_shared<EnumArgs>();
  auto* enumerate = topo_cmd->add_subcommand("enumerate", "List complexes generated by tetrahedra");
  enumerate->add_option("--max-vertices", ea->max_vertices, "Vertices available")->capture_default_str();
  enumerate->add_option("--filter", ea->filter, "all, closed-manifold or homology-sphere")
      ->check(CLI::IsMember({"all", "closed-manifold", "homology-sphere"}))
      ->capture_default_str();
  enumerate->add_option("--count", ea->count, "Complexes to emit")->capture_default_str();
  enumerate->add_option("--budget", ea->budget, "Codes examined in total")->capture_default_str();
  add_json_flag(enumerate, ctx);
  enumerate->callback([&ctx, ea] {
    auto e = topo::enumerate_complexes(ea->max_vertices, parse_filter(ea->filter));
    const auto [codes, status] = e.take(ea->count, ea->budget);
    ctx.begin("topo enumerate");
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (auto code : codes) {
      const auto k = topo::complex_of_code(ea->max_vertices, code);
      if (ctx.json) {
        items.push_back({{"code", code}, {"vertices", k.vertices().size()}, {"tetrahedra", k.count(3)},
                         {"euler_characteristic", topo::euler_characteristic(k)}});
      } else {
        ctx.out << "code " << code << ": vertices=" << k.vertices().size() << " tetrahedra=" << k.count(3)
                << " chi=" << topo::euler_characteristic(k) << '\n';
      }
    }
    if (ctx.json) {
      ctx.doc["max_vertices"] = ea->max_vertices;
      ctx.doc["filter"] = ea->filter;
      ctx.doc["budget"] = ea->budget;
      ctx.doc["items"] = items;
      ctx.doc["status"] = status_name(status);
      return;
    }
    ctx.out << "emitted=" << codes.size() << " status=" << status_name(status) << " budget=" << ea->budget << '\n';
  });

  auto manifold_file = std::make_shared<std::string>();
  auto* manifold = topo_cmd->add_subcommand("manifold-check", "Closed 3-manifold recognition");
  manifold->add_option("file", *manifold_file, "Complex file")->required();
  add_json_flag(manifold, ctx);
  manifold->callback([&ctx, manifold_file] {
    const auto verdict = topo::is_closed_3_manifold(load(*manifold_file));
    ctx.begin("topo manifold-check");
    if (ctx.json) {
      ctx.doc["closed_manifold"] = verdict.closed_manifold;
      ctx.doc["diagnostic"] = verdict.diagnostic;
      return;
    }
    ctx.out << (verdict.closed_manifold ? "yes" : "no") << ": " << verdict.diagnostic << '\n';
  });

  auto matrix_text = std::make_shared<std::string>();
  auto* smith = topo_cmd->add_subcommand("smith", "Smith normal form of an integer matrix");
  smith->add_option("--matrix", *matrix_text, "Rows separated by ';', entries by spaces")->required();
  add_json_flag(smith, ctx);
  smith->callback([&ctx, matrix_text] {
    const auto sf = topo::smith_normal_form(parse_matrix(*matrix_text));
    ctx.begin("topo smith");
    if (ctx.json) {
      ctx.doc["rank"] = sf.rank;
      ctx.doc["invariant_factors"] = strings(sf.invariant_factors);
      ctx.doc["diagonal"] = topo::render(sf.diagonal);
      return;
    }
    ctx.out << topo::render(sf.diagonal) << "rank = " << sf.rank << '\n'
            << "invariant factors = " << join_numbers(strings(sf.invariant_factors)) << '\n';
  });
}

}  // namespace numlab::cli
