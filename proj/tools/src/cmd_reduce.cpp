#include "context.hpp"
#include "numlab/fourcolor.hpp"
#include "numlab/godel.hpp"
#include "numlab/miu.hpp"

namespace numlab::cli {

namespace {

void fourcolor_graph(Context& ctx, const std::string& file) {
  const auto g = reductions::parse_graph(read_file(file));
  const auto coloring = reductions::four_colorable(g);
  // Planarity is only decided within its guard; larger graphs are still coloured.
  std::optional<bool> planar;
  if (g.vertex_count() <= reductions::kMaxPlanarityVertices) planar = reductions::is_planar(g);
  if (ctx.json) {
    ctx.doc["vertices"] = g.vertex_count();
    ctx.doc["edges"] = g.edges().size();
    ctx.doc["planar"] = planar ? nlohmann::ordered_json(*planar) : nlohmann::ordered_json(nullptr);
    ctx.doc["four_colorable"] = coloring.has_value();
    if (coloring) {
      std::vector<unsigned> cs(coloring->colors.begin(), coloring->colors.end());
      ctx.doc["coloring"] = cs;
    }
    return;
  }
  ctx.out << "vertices=" << g.vertex_count() << " edges=" << g.edges().size() << '\n'
          << "planar=" << (planar ? (*planar ? "true" : "false") : "unknown (above guard)") << '\n';
  if (coloring) {
    std::vector<unsigned> cs(coloring->colors.begin(), coloring->colors.end());
    ctx.out << "four-colorable=true coloring=" << join_numbers(cs, ",") << '\n';
  } else {
    ctx.out << "four-colorable=false\n";
  }
}

}  // namespace

void register_reduce(CLI::App& app, Context& ctx) {
  auto* reduce_cmd = app.add_subcommand("reduce", "Problems recast as listable sets");
  reduce_cmd->require_subcommand(1);

  struct FourArgs {
    std::string graph;
    std::optional<std::size_t> max_n;
    std::optional<std::size_t> count;
    bool dedup = false;
    std::uint64_t budget = 100;
  };
  auto fa = std::make_shared<FourArgs>();
  auto* four = reduce_cmd->add_subcommand("fourcolor", "Four-colour predicate and its counterexample set");
  auto* graph_opt = four->add_option("--graph", fa->graph, "Colour and test a graph file");
  auto* max_opt = four->add_option("--max-n", fa->max_n, "Search for counterexamples to P(n) up to n");
  auto* count_opt = four->add_option("--count", fa->count, "Count planar graphs on n vertices");
  four->add_flag("--dedup", fa->dedup, "Count isomorphism classes instead of labeled graphs (n <= 6)");
  four->add_option("--budget", fa->budget, "Work units for the counterexample search")->capture_default_str();
  graph_opt->excludes(max_opt)->excludes(count_opt);
  max_opt->excludes(count_opt);
  add_json_flag(four, ctx);
  four->callback([&ctx, fa] {
    ctx.begin("reduce fourcolor");
    if (!fa->graph.empty()) return fourcolor_graph(ctx, fa->graph);
    if (fa->count) {
      const std::size_t n = *fa->count;
      const auto graphs = reductions::enumerate_planar_graphs(n, fa->dedup);
      if (ctx.json) {
        ctx.doc["n"] = n;
        ctx.doc["dedup"] = fa->dedup;
        ctx.doc["planar_graphs"] = graphs.size();
      } else {
        ctx.out << "n=" << n << (fa->dedup ? " classes=" : " labeled=") << graphs.size() << '\n';
      }
      return;
    }
    if (!fa->max_n) throw UsageError("one of --graph, --max-n or --count is required");
    auto e = reductions::fourcolor_counterexample_enumerator(*fa->max_n);
    std::vector<sets::Natural> found;
    sets::PullStatus status = sets::PullStatus::BudgetExceeded;
    sets::Natural left = fa->budget;
    while (left > 0) {
      const auto r = e.pull(left);
      left -= std::min(left, r.work);
      status = r.status;
      if (r.has_item()) found.push_back(r.item);
      else break;
    }
    if (ctx.json) {
      ctx.doc["max_n"] = *fa->max_n;
      ctx.doc["budget"] = fa->budget;
      ctx.doc["counterexamples"] = found;
      ctx.doc["status"] = status_name(status);
      return;
    }
    ctx.out << "counterexamples to P(n) for n<=" << *fa->max_n << ": "
            << (found.empty() ? "none" : join_numbers(found)) << '\n'
            << "status=" << status_name(status) << " budget=" << fa->budget << '\n';
  });

  struct MiuArgs {
    std::size_t depth = 8;
    std::size_t cap = reductions::kDefaultLengthCap;
    std::string contains;
    std::optional<std::uint64_t> index;
    std::string sentence;
    bool list = false;
    bool enumerate = false;
    std::size_t count = 10;
    std::uint64_t budget = 10000;
  };
  auto ma = std::make_shared<MiuArgs>();
  auto* miu = reduce_cmd->add_subcommand("miu", "Theorems of the MIU system");
  miu->add_option("--depth", ma->depth, "Rule applications")->capture_default_str();
  miu->add_option("--cap", ma->cap, "Longest sentence explored")->capture_default_str();
  miu->add_option("--contains", ma->contains, "Report whether this sentence is a theorem within the depth");
  miu->add_flag("--list", ma->list, "Print the theorems in discovery order");
  auto* index_opt = miu->add_option("--index", ma->index, "Print the sentence with this index");
  auto* sentence_opt = miu->add_option("--sentence", ma->sentence, "Print the index of this sentence");
  auto* enum_flag = miu->add_flag("--enumerate", ma->enumerate, "Stream theorem indices with a budget");
  miu->add_option("--count", ma->count, "Indices to emit with --enumerate")->capture_default_str();
  miu->add_option("--budget", ma->budget, "Sentences expanded with --enumerate")->capture_default_str();
  index_opt->excludes(sentence_opt)->excludes(enum_flag);
  sentence_opt->excludes(enum_flag);
  add_json_flag(miu, ctx);
  miu->callback([&ctx, ma] {
    ctx.begin("reduce miu");
    if (ma->index) {
      const auto s = reductions::sentence_of_index(*ma->index);
      if (ctx.json) {
        ctx.doc["index"] = *ma->index;
        ctx.doc["sentence"] = s.text();
      } else {
        ctx.out << "sentence(" << *ma->index << ") = " << s.text() << '\n';
      }
      return;
    }
    if (!ma->sentence.empty()) {
      const auto n = reductions::index_of_sentence(reductions::Sentence(ma->sentence));
      if (ctx.json) {
        ctx.doc["sentence"] = ma->sentence;
        ctx.doc["index"] = n;
      } else {
        ctx.out << "index(" << ma->sentence << ") = " << n << '\n';
      }
      return;
    }
    if (ma->enumerate) {
      auto e = reductions::theorem_set_enumerator(ma->cap);
      const auto [items, status] = e.take(ma->count, ma->budget);
      if (ctx.json) {
        ctx.doc["cap"] = ma->cap;
        ctx.doc["budget"] = ma->budget;
        ctx.doc["items"] = items;
        ctx.doc["status"] = status_name(status);
      } else {
        ctx.out << join_numbers(items) << '\n'
                << "emitted=" << items.size() << " status=" << status_name(status) << " cap=" << ma->cap
                << " budget=" << ma->budget << '\n';
      }
      return;
    }
    const auto closure = reductions::miu_theorems(ma->depth, ma->cap);
    if (ctx.json) {
      ctx.doc["depth"] = ma->depth;
      ctx.doc["cap"] = ma->cap;
      ctx.doc["theorems"] = closure.theorems.size();
      if (!ma->contains.empty()) ctx.doc["contains"] = closure.contains(ma->contains);
      if (ma->list) {
        std::vector<std::string> texts;
        for (const auto& s : closure.discovery_order) texts.push_back(s.text());
        ctx.doc["discovery_order"] = texts;
      }
      return;
    }
    ctx.out << "theorems=" << closure.theorems.size() << " depth=" << ma->depth << " cap=" << ma->cap << '\n';
    if (!ma->contains.empty())
      ctx.out << ma->contains << ": "
              << (closure.contains(ma->contains) ? "theorem" : "not derived within the depth") << '\n';
    if (ma->list)
      for (const auto& s : closure.discovery_order) ctx.out << s.text() << '\n';
  });

  struct GodelArgs {
    std::string file;
    std::string decode;
  };
  auto ga = std::make_shared<GodelArgs>();
  auto* godel = reduce_cmd->add_subcommand("godel", "Number programs and decode numbers");
  auto* file_opt = godel->add_option("file", ga->file, "Program file to encode");
  auto* decode_opt = godel->add_option("--decode", ga->decode, "Decode this number to a program");
  file_opt->excludes(decode_opt);
  add_json_flag(godel, ctx);
  godel->callback([&ctx, ga] {
    ctx.begin("reduce godel");
    if (!ga->decode.empty()) {
      BigInt n;
      if (ga->decode.find_first_not_of("0123456789") != std::string::npos || n.set_str(ga->decode, 10) != 0)
        throw UsageError("expected a natural number, got '" + ga->decode + "'");
      const auto text = machine::render_program(reductions::decode_program(n));
      if (ctx.json) {
        ctx.doc["n"] = n.get_str();
        ctx.doc["program"] = text;
      } else {
        ctx.out << text;
      }
      return;
    }
    if (ga->file.empty()) throw UsageError("give a program file or --decode N");
    const auto n = reductions::encode_program(machine::parse_program(read_file(ga->file)));
    if (ctx.json)
      ctx.doc["n"] = n.get_str();
    else
      ctx.out << n.get_str() << '\n';
  });
}

}  // namespace numlab::cli
