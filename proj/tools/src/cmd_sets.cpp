#include "context.hpp"
#include "numlab/sets.hpp"

namespace numlab::cli {

namespace {

std::string membership_name(sets::Membership m) {
  switch (m) {
    case sets::Membership::Found: return "found";
    case sets::Membership::NotFoundWithinBudget: return "not-found-within-budget";
    case sets::Membership::ExhaustedWithoutFinding: return "exhausted-without-finding";
  }
  return "unknown";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string tuple_text(const std::vector<BigInt>& xs) {
  std::vector<std::string> parts;
  for (const auto& x : xs) parts.push_back(x.get_str());
  return "(" + join(parts, ",") + ")";
}

BigInt parse_big(const std::string& text) {
  BigInt v;
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || v.set_str(text, 10) != 0)
    throw UsageError("expected a natural number, got '" + text + "'");
  return v;
}

}  // namespace

void register_sets(CLI::App& app, Context& ctx) {
  auto* sets_cmd = app.add_subcommand("sets", "Listable sets and pairing codecs");
  sets_cmd->require_subcommand(1);

  struct PrimeArgs {
    std::size_t count = 10;
    std::uint64_t budget = 100000;
    std::optional<std::uint64_t> member;
  };
  auto pa = std::make_shared<PrimeArgs>();
  auto* primes = sets_cmd->add_subcommand("primes", "Enumerate the primes from their decider");
  primes->add_option("--count", pa->count, "Number of primes to emit")->capture_default_str();
  primes->add_option("--budget", pa->budget, "Total work units")->capture_default_str();
  primes->add_option("--member", pa->member, "Semi-decide membership of this number instead");
  add_json_flag(primes, ctx);
  primes->callback([&ctx, pa] {
    auto e = sets::enumerator_from_predicate(sets::DecidablePredicate::native(sets::is_prime, "prime"));
    ctx.begin("sets primes");
    if (pa->member) {
      const auto m = sets::member_semidecide(e, *pa->member, pa->budget);
      if (ctx.json) {
        ctx.doc["n"] = *pa->member;
        ctx.doc["budget"] = pa->budget;
        ctx.doc["membership"] = membership_name(m);
      } else {
        ctx.out << *pa->member << ": " << membership_name(m) << " (budget=" << pa->budget << ")\n";
      }
      return;
    }
    const auto [items, status] = e.take(pa->count, pa->budget);
    if (ctx.json) {
      ctx.doc["count"] = pa->count;
      ctx.doc["budget"] = pa->budget;
      ctx.doc["items"] = items;
      ctx.doc["status"] = status_name(status);
      return;
    }
    ctx.out << join_numbers(items) << '\n'
            << "emitted=" << items.size() << " status=" << status_name(status) << " budget=" << pa->budget << '\n';
  });

  struct PairArgs {
    std::vector<std::string> values;
    bool unpair = false;
    bool encode = false;
    std::optional<std::string> decode;
    std::size_t arity = 2;
  };
  auto pr = std::make_shared<PairArgs>();
  auto* pair = sets_cmd->add_subcommand("pair", "Cantor pairing and tuple codecs");
  pair->add_option("values", pr->values, "Naturals (x y to pair, n to unpair, a tuple to encode)");
  auto* unpair_flag = pair->add_flag("--unpair", pr->unpair, "Invert the pairing of a single number");
  auto* encode_flag = pair->add_flag("--encode", pr->encode, "Encode the values as a tuple");
  auto* decode_opt = pair->add_option("--decode", pr->decode, "Decode this number as a tuple");
  pair->add_option("--arity", pr->arity, "Tuple length for --decode")->capture_default_str();
  unpair_flag->excludes(encode_flag)->excludes(decode_opt);
  encode_flag->excludes(decode_opt);
  add_json_flag(pair, ctx);
  pair->callback([&ctx, pr] {
    ctx.begin("sets pair");
    std::vector<BigInt> vals;
    for (const auto& v : pr->values) vals.push_back(parse_big(v));

    if (pr->decode) {
      if (pr->arity == 0) throw UsageError("--arity must be at least 1");
      const BigInt n = parse_big(*pr->decode);
      const auto xs = sets::tuple_decode(n, pr->arity);
      if (ctx.json) {
        ctx.doc["n"] = n.get_str();
        ctx.doc["arity"] = pr->arity;
        std::vector<std::string> parts;
        for (const auto& x : xs) parts.push_back(x.get_str());
        ctx.doc["tuple"] = parts;
      } else {
        ctx.out << "decode(" << n.get_str() << ", " << pr->arity << ") = " << tuple_text(xs) << '\n';
      }
      return;
    }
    if (pr->encode) {
      const BigInt n = sets::tuple_encode(vals);
      if (ctx.json) {
        ctx.doc["tuple"] = pr->values;
        ctx.doc["n"] = n.get_str();
      } else {
        ctx.out << "encode" << tuple_text(vals) << " = " << n.get_str() << '\n';
      }
      return;
    }
    if (pr->unpair) {
      if (vals.size() != 1) throw UsageError("--unpair takes exactly one number");
      const auto [x, y] = sets::unpair(vals[0]);
      if (ctx.json) {
        ctx.doc["n"] = vals[0].get_str();
        ctx.doc["x"] = x.get_str();
        ctx.doc["y"] = y.get_str();
      } else {
        ctx.out << "unpair(" << vals[0].get_str() << ") = (" << x.get_str() << "," << y.get_str() << ")\n";
      }
      return;
    }
    if (vals.size() != 2) throw UsageError("pair takes exactly two numbers");
    const BigInt n = sets::pair(vals[0], vals[1]);
    if (ctx.json) {
      ctx.doc["x"] = vals[0].get_str();
      ctx.doc["y"] = vals[1].get_str();
      ctx.doc["n"] = n.get_str();
    } else {
      ctx.out << "pair(" << vals[0].get_str() << "," << vals[1].get_str() << ") = " << n.get_str() << '\n';
    }
  });

  struct DovetailArgs {
    std::size_t arity = 2;
    std::size_t count = 10;
    std::uint64_t budget = 1000;
  };
  auto da = std::make_shared<DovetailArgs>();
  auto* dovetail = sets_cmd->add_subcommand("dovetail", "List k-tuples in dovetail order");
  dovetail->add_option("--arity", da->arity, "Tuple length")->capture_default_str();
  dovetail->add_option("--count", da->count, "Number of tuples")->capture_default_str();
  dovetail->add_option("--budget", da->budget, "Total work units")->capture_default_str();
  add_json_flag(dovetail, ctx);
  dovetail->callback([&ctx, da] {
    if (da->arity == 0) throw UsageError("--arity must be at least 1");
    auto e = sets::dovetail_tuples(da->arity);
    const auto [items, status] = e.take(da->count, da->budget);
    ctx.begin("sets dovetail");
    nlohmann::ordered_json tuples = nlohmann::ordered_json::array();
    for (auto n : items) {
      const auto xs = sets::tuple_decode(n, da->arity);
      if (ctx.json) {
        tuples.push_back({{"n", n}, {"tuple", xs}});
      } else {
        ctx.out << n << " (" << join_numbers(xs, ",") << ")\n";
      }
    }
    if (ctx.json) {
      ctx.doc["arity"] = da->arity;
      ctx.doc["budget"] = da->budget;
      ctx.doc["tuples"] = tuples;
      ctx.doc["status"] = status_name(status);
    } else {
      ctx.out << "emitted=" << items.size() << " status=" << status_name(status) << " budget=" << da->budget << '\n';
    }
  });
}

}  // namespace numlab::cli
