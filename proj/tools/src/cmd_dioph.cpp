#include "context.hpp"
#include "numlab/dioph.hpp"

namespace numlab::cli {

namespace {

const dioph::DiophantineFamily& builtin(const std::string& name) {
  const auto& fams = dioph::builtin_families();
  const auto it = fams.find(name);
  if (it == fams.end()) throw UsageError("unknown family '" + name + "' (even, square, composite)");
  return it->second;
}

// Native deciders for the sets the builtin families represent.
sets::DecidablePredicate reference_for(const std::string& name) {
  if (name == "even") return sets::DecidablePredicate::native([](sets::Natural n) { return n % 2 == 0; }, "even");
  if (name == "square") return sets::DecidablePredicate::native(sets::is_square, "square");
  if (name == "composite") return sets::DecidablePredicate::native(sets::is_composite, "composite");
  throw UsageError("no reference predicate for family '" + name + "'");
}

dioph::DiophantineFamily family_from(const std::string& family, const std::string& poly, const std::string& param) {
  if (!family.empty() && !poly.empty()) throw UsageError("give either --family or --poly, not both");
  if (!family.empty()) return builtin(family);
  if (poly.empty()) throw UsageError("one of --family or --poly is required");
  return dioph::DiophantineFamily(dioph::poly_parse(poly), param);
}

std::string describe(const dioph::DiophantineFamily& fam) {
  std::string unknowns;
  for (const auto& u : fam.unknowns()) unknowns += (unknowns.empty() ? "" : ",") + u;
  return dioph::render(fam.poly()) + " = 0 (parameter " + fam.parameter() + ", unknowns " +
         (unknowns.empty() ? "none" : unknowns) + ")";
}

// "x=3,y=4"
dioph::Assignment parse_assignment(const std::string& text) {
  dioph::Assignment out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(start, comma - start);
    const std::size_t eq = item.find('=');
    BigInt v;
    if (eq == std::string::npos || eq == 0 || v.set_str(item.substr(eq + 1), 10) != 0)
      throw UsageError("expected var=integer, got '" + item + "'");
    out[item.substr(0, eq)] = v;
    start = comma + 1;
  }
  return out;
}

}  // namespace

void register_dioph(CLI::App& app, Context& ctx) {
  auto* dioph_cmd = app.add_subcommand("dioph", "Diophantine families and representations");
  dioph_cmd->require_subcommand(1);

  struct EnumArgs {
    std::string family, poly, param = "t";
    std::size_t count = 10;
    std::uint64_t budget = 100000;
  };
  auto ea = std::make_shared<EnumArgs>();
  auto* enumerate = dioph_cmd->add_subcommand("enumerate", "List parameters with a solution by dovetailing");
  enumerate->add_option("--family", ea->family, "Builtin family: even, square, composite");
  enumerate->add_option("--poly", ea->poly, "Polynomial f(t, x1..xn)");
  enumerate->add_option("--param", ea->param, "Parameter variable")->capture_default_str();
  enumerate->add_option("--count", ea->count, "Number of parameters to emit")->capture_default_str();
  enumerate->add_option("--budget", ea->budget, "Tuples examined in total")->capture_default_str();
  add_json_flag(enumerate, ctx);
  enumerate->callback([&ctx, ea] {
    const auto fam = family_from(ea->family, ea->poly, ea->param);
    auto e = dioph::diophantine_enumerator(fam);
    const auto [items, status] = e.take(ea->count, ea->budget);
    ctx.begin("dioph enumerate");
    if (ctx.json) {
      ctx.doc["family"] = dioph::render(fam.poly());
      ctx.doc["parameter"] = fam.parameter();
      ctx.doc["budget"] = ea->budget;
      ctx.doc["items"] = items;
      ctx.doc["status"] = status_name(status);
      return;
    }
    ctx.out << describe(fam) << '\n'
            << join_numbers(items) << '\n'
            << "emitted=" << items.size() << " status=" << status_name(status) << " budget=" << ea->budget << '\n';
  });

  struct CheckArgs {
    std::string family;
    std::string t_range = "0..100";
    std::uint64_t bound = 200;
  };
  auto ca = std::make_shared<CheckArgs>();
  auto* check = dioph_cmd->add_subcommand("check", "Compare a builtin family with its native predicate");
  check->add_option("--family", ca->family, "Builtin family: even, square, composite")->required();
  check->add_option("--t-range", ca->t_range, "Parameter range a..b")->capture_default_str();
  check->add_option("--bound", ca->bound, "Witness box bound")->capture_default_str();
  add_json_flag(check, ctx);
  check->callback([&ctx, ca] {
    const auto [lo, hi] = parse_range(ca->t_range);
    const auto& fam = builtin(ca->family);
    const auto rep = dioph::verify_representation(fam, reference_for(ca->family), lo, hi, ca->bound);
    ctx.begin("dioph check");
    if (ctx.json) {
      ctx.doc["family"] = ca->family;
      ctx.doc["polynomial"] = dioph::render(fam.poly());
      ctx.doc["t_lo"] = lo;
      ctx.doc["t_hi"] = hi;
      ctx.doc["bound"] = ca->bound;
      ctx.doc["agree_positive"] = rep.agree_positive;
      ctx.doc["agree_negative"] = rep.agree_negative;
      ctx.doc["disagree"] = rep.disagree;
      ctx.doc["unresolved"] = rep.unresolved;
      ctx.doc["disagree_examples"] = rep.disagree_examples;
      ctx.doc["unresolved_examples"] = rep.unresolved_examples;
      return;
    }
    ctx.out << "family " << ca->family << ": " << describe(fam) << '\n'
            << "t-range " << lo << ".." << hi << " witness-bound " << ca->bound << '\n'
            << "agree-positive=" << rep.agree_positive << " agree-negative=" << rep.agree_negative
            << " disagreements=" << rep.disagree << " unresolved=" << rep.unresolved << '\n';
    if (!rep.disagree_examples.empty()) ctx.out << "disagree at: " << join_numbers(rep.disagree_examples) << '\n';
    if (!rep.unresolved_examples.empty())
      ctx.out << "unresolved at: " << join_numbers(rep.unresolved_examples) << '\n';
  });

  struct SearchArgs {
    std::string family, poly, param = "t";
    std::uint64_t t = 0;
    std::optional<std::uint64_t> bound;
    std::optional<std::uint64_t> dovetail;
  };
  auto sa = std::make_shared<SearchArgs>();
  auto* search = dioph_cmd->add_subcommand("search", "Look for a natural solution at a fixed parameter");
  search->add_option("--family", sa->family, "Builtin family: even, square, composite");
  search->add_option("--poly", sa->poly, "Polynomial f(t, x1..xn)");
  search->add_option("--param", sa->param, "Parameter variable")->capture_default_str();
  search->add_option("--t", sa->t, "Parameter value")->required();
  auto* bound_opt = search->add_option("--bound", sa->bound, "Box search with unknowns in [0, bound] (default 100)");
  search->add_option("--dovetail", sa->dovetail, "Dovetail search over this many tuples")->excludes(bound_opt);
  add_json_flag(search, ctx);
  search->callback([&ctx, sa] {
    const auto fam = family_from(sa->family, sa->poly, sa->param);
    dioph::SearchStrategy strategy = dioph::BoxSearch{sa->bound.value_or(100)};
    if (sa->dovetail) strategy = dioph::DovetailSearch{*sa->dovetail};
    const auto res = dioph::search_solution(fam, sa->t, strategy);
    const char* kind = sa->dovetail ? "dovetail" : "box";
    ctx.begin("dioph search");

    std::string check;
    if (res.witness) {
      dioph::Assignment a{{fam.parameter(), from_u64(sa->t)}};
      for (std::size_t i = 0; i < fam.unknowns().size(); ++i) a[fam.unknowns()[i]] = from_u64((*res.witness)[i]);
      check = dioph::poly_eval(fam.poly(), a).get_str();
    }
    if (ctx.json) {
      ctx.doc["polynomial"] = dioph::render(fam.poly());
      ctx.doc["t"] = sa->t;
      ctx.doc["strategy"] = kind;
      ctx.doc["bound"] = res.bound;
      ctx.doc["solvable"] = res.solvable();
      if (res.witness) {
        ctx.doc["unknowns"] = fam.unknowns();
        ctx.doc["witness"] = *res.witness;
        ctx.doc["value"] = check;
      } else {
        ctx.doc["exhaustive"] = res.exhaustive;
      }
      return;
    }
    ctx.out << describe(fam) << " at " << fam.parameter() << "=" << sa->t << '\n';
    if (res.witness) {
      std::string w;
      for (std::size_t i = 0; i < fam.unknowns().size(); ++i)
        w += (i ? " " : "") + fam.unknowns()[i] + "=" + std::to_string((*res.witness)[i]);
      ctx.out << "solvable: " << w << " (f=" << check << ")\n";
    } else {
      ctx.out << "no solution within " << kind << " " << res.bound
              << (res.exhaustive ? " (exhaustive in the box)" : "") << '\n';
    }
    ctx.out << "strategy=" << kind << " bound=" << res.bound << '\n';
  });

  auto triple = std::make_shared<std::vector<std::string>>();
  auto* exp = dioph_cmd->add_subcommand("exp", "Decide c = a^b");
  exp->add_option("triple", *triple, "The naturals a b c")->expected(3)->required();
  add_json_flag(exp, ctx);
  exp->callback([&ctx, triple] {
    std::array<BigInt, 3> v;
    for (std::size_t i = 0; i < 3; ++i)
      if ((*triple)[i].find_first_not_of("0123456789") != std::string::npos || v[i].set_str((*triple)[i], 10) != 0)
        throw UsageError("expected a natural number, got '" + (*triple)[i] + "'");
    const bool member = dioph::exp_triple_member(v[0], v[1], v[2]);
    ctx.begin("dioph exp");
    if (ctx.json) {
      ctx.doc["a"] = v[0].get_str();
      ctx.doc["b"] = v[1].get_str();
      ctx.doc["c"] = v[2].get_str();
      ctx.doc["member"] = member;
    } else {
      ctx.out << v[2].get_str() << (member ? " = " : " != ") << v[0].get_str() << "^" << v[1].get_str() << '\n';
    }
  });

  struct PolyArgs {
    std::string op = "add";
    std::vector<std::string> operands;
    std::string at;
  };
  auto pa = std::make_shared<PolyArgs>();
  auto* poly = dioph_cmd->add_subcommand("poly", "Polynomial arithmetic and evaluation");
  poly->add_option("--op", pa->op, "add, mul or neg")
      ->check(CLI::IsMember({"add", "mul", "neg"}))
      ->capture_default_str();
  poly->add_option("operands", pa->operands, "One or two polynomials")->required();
  poly->add_option("--eval", pa->at, "Evaluate the result at var=value,...");
  add_json_flag(poly, ctx);
  poly->callback([&ctx, pa] {
    const std::size_t want = pa->op == "neg" ? 1 : 2;
    if (pa->operands.size() != want)
      throw UsageError("--op " + pa->op + " takes " + std::to_string(want) + " polynomial(s)");
    const auto p = dioph::poly_parse(pa->operands[0]);
    const auto q = want == 2 ? dioph::poly_parse(pa->operands[1]) : dioph::IntPolynomial{};
    const auto op = pa->op == "add" ? dioph::ArithOp::Add
                    : pa->op == "mul" ? dioph::ArithOp::Multiply
                                      : dioph::ArithOp::Negate;
    const auto r = dioph::poly_arith(op, p, q);
    ctx.begin("dioph poly");
    std::optional<std::string> value;
    if (!pa->at.empty()) value = dioph::poly_eval(r, parse_assignment(pa->at)).get_str();
    if (ctx.json) {
      ctx.doc["op"] = pa->op;
      ctx.doc["result"] = dioph::render(r);
      ctx.doc["degree"] = r.degree();
      if (value) ctx.doc["value"] = *value;
      return;
    }
    ctx.out << dioph::render(r) << '\n';
    if (value) ctx.out << "value at " << pa->at << ": " << *value << '\n';
  });
}

}  // namespace numlab::cli
