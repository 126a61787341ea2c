#include "context.hpp"
#include "numlab/machine.hpp"

namespace numlab::cli {

namespace {

std::string status_name(machine::RunStatus s) {
  return s == machine::RunStatus::Halted ? "halted" : "fuel-exhausted";
}

std::string show_state(const machine::MachineState& st) {
  std::string line;
  for (const auto& [var, value] : st.values) line += (line.empty() ? "" : " ") + var + "=" + std::to_string(value);
  return line;
}

}  // namespace

void register_machine(CLI::App& app, Context& ctx) {
  auto* machine_cmd = app.add_subcommand("machine", "Counter-machine programs");
  machine_cmd->require_subcommand(1);

  struct RunArgs {
    std::string file;
    std::string input;
    std::uint64_t fuel = 10000;
    bool trace = false;
  };
  auto run_args = std::make_shared<RunArgs>();
  auto* run = machine_cmd->add_subcommand("run", "Run a program on inputs X1..Xn");
  run->add_option("file", run_args->file, "Program file")->required();
  run->add_option("--input", run_args->input, "Comma-separated inputs bound to X1..Xn");
  run->add_option("--fuel", run_args->fuel, "Maximum number of steps")->capture_default_str();
  run->add_flag("--trace", run_args->trace, "Print every intermediate state");
  add_json_flag(run, ctx);
  run->callback([&ctx, run_args] {
    const machine::Program prog = machine::parse_program(read_file(run_args->file));
    const auto inputs = parse_naturals(run_args->input);
    ctx.begin("machine run");

    nlohmann::ordered_json trace = nlohmann::ordered_json::array();
    if (run_args->trace) {
      machine::MachineState st;
      for (std::size_t i = 0; i < inputs.size(); ++i) st.values[machine::input_name(i + 1)] = inputs[i];
      while (!st.halted() && st.steps < run_args->fuel) {
        if (ctx.json)
          trace.push_back({{"step", st.steps}, {"pc", *st.pc}, {"state", show_state(st)}});
        else
          ctx.out << "step " << st.steps << " pc=" << *st.pc << " " << show_state(st) << '\n';
        st = machine::step(prog, st);
      }
    }

    const machine::RunOutcome res = machine::run(prog, inputs, run_args->fuel);
    if (ctx.json) {
      ctx.doc["status"] = status_name(res.status);
      ctx.doc["fuel"] = run_args->fuel;
      ctx.doc["steps"] = res.final_state.steps;
      if (res.status == machine::RunStatus::Halted) ctx.doc["Y"] = res.output;
      if (run_args->trace) ctx.doc["trace"] = trace;
      return;
    }
    if (res.status == machine::RunStatus::Halted)
      ctx.out << "Y=" << res.output << '\n';
    else
      ctx.out << "fuel exhausted after " << res.final_state.steps << " steps (fuel=" << run_args->fuel << ")\n";
  });

  auto parse_file = std::make_shared<std::string>();
  auto* parse = machine_cmd->add_subcommand("parse", "Parse a program and print its canonical form");
  parse->add_option("file", *parse_file, "Program file")->required();
  add_json_flag(parse, ctx);
  parse->callback([&ctx, parse_file] {
    const machine::Program prog = machine::parse_program(read_file(*parse_file));
    const std::string text = machine::render_program(prog);
    ctx.begin("machine parse");
    if (ctx.json) {
      ctx.doc["instructions"] = prog.size();
      ctx.doc["program"] = text;
    } else {
      ctx.out << text;
    }
  });
}

}  // namespace numlab::cli
