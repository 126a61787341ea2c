#include "numlab/cli/dispatch.hpp"

#include <charconv>
#include <fstream>

#include "context.hpp"
#include "numlab/errors.hpp"

namespace numlab::cli {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

std::uint64_t parse_natural(std::string_view tok) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw UsageError("expected a natural number, got '" + std::string(tok) + "'");
  return v;
}

}  // namespace

std::vector<std::uint64_t> parse_naturals(const std::string& csv) {
  std::vector<std::uint64_t> out;
  if (csv.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = csv.find(',', start);
    out.push_back(parse_natural(std::string_view(csv).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("expected a range 'a..b', got '" + text + "'");
  const auto lo = parse_natural(std::string_view(text).substr(0, dots));
  const auto hi = parse_natural(std::string_view(text).substr(dots + 2));
  if (lo > hi) throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

CommandOutcome dispatch(const std::vector<std::string>& args) {
  Context ctx;
  CLI::App app{"numlab: computability, algebraic numbers and topology at desk scale", "numlab"};
  app.require_subcommand(1);
  register_machine(app, ctx);
  register_sets(app, ctx);
  register_dioph(app, ctx);
  register_reduce(app, ctx);
  register_numbers(app, ctx);
  register_topo(app, ctx);

  CommandOutcome outcome;
  std::ostringstream out, err;
  try {
    // CLI11 consumes arguments from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (ctx.json) ctx.out << ctx.doc.dump(2) << '\n';
    outcome.exit_code = kExitOk;
    outcome.out = ctx.out.str();
    return outcome;
  } catch (const CLI::CallForHelp& e) {
    outcome.exit_code = app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    outcome.exit_code = app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    outcome.exit_code = kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    outcome.exit_code = kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    outcome.exit_code = kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    outcome.exit_code = kExitUsage;
  } catch (const GuardViolation& e) {
    err << "guard violation: " << e.what() << '\n';
    outcome.exit_code = kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    outcome.exit_code = kExitDomain;
  }
  outcome.out = out.str();
  outcome.err = err.str();
  return outcome;
}

const std::vector<Route>& routes() {
  static const std::vector<Route> table = {
      {"machine run", {"machine.parse_program", "machine.run", "machine.step"}},
      {"machine parse", {"machine.parse_program", "machine.render_program"}},
      {"sets primes", {"sets.enumerator_from_predicate", "sets.member_semidecide"}},
      {"sets pair", {"sets.pair", "sets.unpair", "sets.tuple_encode", "sets.tuple_decode"}},
      {"sets dovetail", {"sets.dovetail_tuples", "sets.tuple_decode"}},
      {"dioph enumerate", {"dioph.builtin_families", "dioph.poly_parse", "dioph.diophantine_enumerator"}},
      {"dioph check", {"dioph.builtin_families", "dioph.poly_parse", "dioph.verify_representation"}},
      {"dioph search", {"dioph.poly_parse", "dioph.search_solution", "dioph.poly_eval"}},
      {"dioph exp", {"dioph.exp_triple_member"}},
      {"dioph poly", {"dioph.poly_parse", "dioph.poly_arith", "dioph.poly_eval"}},
      {"reduce fourcolor",
       {"reductions.four_colorable", "reductions.is_planar", "reductions.enumerate_planar_graphs",
        "reductions.p_of_n", "reductions.fourcolor_counterexample_enumerator"}},
      {"reduce miu",
       {"reductions.miu_theorems", "reductions.theorem_set_enumerator", "reductions.sentence_of_index",
        "reductions.index_of_sentence"}},
      {"reduce godel", {"reductions.encode_program", "reductions.decode_program"}},
      {"numbers symmetry",
       {"numbers.factor_integer_poly", "numbers.discriminant", "numbers.galois_group", "numbers.symmetry_profile"}},
      {"numbers fourier",
       {"numbers.sqrt_as_cyclotomic", "numbers.cyc_multiply", "numbers.cyc_equals", "numbers.embed_rational",
        "numbers.numeric_eval"}},
      {"numbers gauss", {"numbers.quadratic_gauss_sum", "numbers.cyc_multiply", "numbers.numeric_eval"}},
      {"numbers cyclotomic",
       {"numbers.cyclotomic_polynomial", "numbers.power_basis_reduce", "numbers.cyc_add", "numbers.numeric_eval"}},
      {"numbers factor",
       {"numbers.content_primitive", "numbers.poly_gcd", "numbers.derivative", "numbers.squarefree_part",
        "numbers.factor_integer_poly", "numbers.discriminant"}},
      {"topo homology",
       {"topo.face_closure", "topo.boundary_matrix", "topo.smith_normal_form", "topo.homology"}},
      {"topo pi1", {"topo.face_closure", "topo.fundamental_group_presentation", "topo.abelianization"}},
      {"topo euler", {"topo.face_closure", "topo.euler_characteristic"}},
      {"topo enumerate", {"topo.enumerate_complexes"}},
      {"topo manifold-check", {"topo.face_closure", "topo.is_closed_3_manifold"}},
      {"topo smith", {"topo.smith_normal_form"}},
  };
  return table;
}

const std::vector<std::string>& library_operations() {
  static const std::vector<std::string> ops = {
      "machine.parse_program", "machine.render_program", "machine.step", "machine.run",
      "sets.pair", "sets.unpair", "sets.tuple_encode", "sets.tuple_decode",
      "sets.enumerator_from_predicate", "sets.dovetail_tuples", "sets.member_semidecide",
      "dioph.poly_parse", "dioph.poly_eval", "dioph.poly_arith", "dioph.search_solution",
      "dioph.diophantine_enumerator", "dioph.builtin_families", "dioph.exp_triple_member",
      "dioph.verify_representation",
      "reductions.encode_program", "reductions.decode_program", "reductions.sentence_of_index",
      "reductions.index_of_sentence", "reductions.miu_theorems", "reductions.theorem_set_enumerator",
      "reductions.four_colorable", "reductions.is_planar", "reductions.enumerate_planar_graphs",
      "reductions.p_of_n", "reductions.fourcolor_counterexample_enumerator",
      "numbers.content_primitive", "numbers.poly_gcd", "numbers.derivative", "numbers.squarefree_part",
      "numbers.factor_integer_poly", "numbers.discriminant", "numbers.galois_group",
      "numbers.symmetry_profile", "numbers.cyclotomic_polynomial", "numbers.cyc_add",
      "numbers.cyc_multiply", "numbers.cyc_equals", "numbers.embed_rational",
      "numbers.power_basis_reduce", "numbers.quadratic_gauss_sum", "numbers.sqrt_as_cyclotomic",
      "numbers.numeric_eval",
      "topo.face_closure", "topo.euler_characteristic", "topo.boundary_matrix", "topo.smith_normal_form",
      "topo.homology", "topo.fundamental_group_presentation", "topo.abelianization",
      "topo.is_closed_3_manifold", "topo.enumerate_complexes",
  };
  return ops;
}

}  // namespace numlab::cli
