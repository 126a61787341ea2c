#include "numlab/machine.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "numlab/errors.hpp"

namespace numlab::machine {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string render_op(const Instruction& ins) {
  switch (ins.kind) {
    case OpKind::Increment:
      return "INC " + ins.variable;
    case OpKind::Decrement:
      return "DEC " + ins.variable;
    case OpKind::BranchNonzero:
      return "IFNZ " + ins.variable + " GOTO " + ins.target.value_or("");
  }
  return {};
}

}  // namespace

bool is_valid_token(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; });
}

std::string input_name(std::size_t i) { return "X" + std::to_string(i); }

Instruction Instruction::inc(std::string var, std::optional<std::string> label) {
  return {OpKind::Increment, std::move(var), std::nullopt, std::move(label)};
}

Instruction Instruction::dec(std::string var, std::optional<std::string> label) {
  return {OpKind::Decrement, std::move(var), std::nullopt, std::move(label)};
}

Instruction Instruction::branch(std::string var, std::string target,
                                std::optional<std::string> label) {
  return {OpKind::BranchNonzero, std::move(var), std::move(target), std::move(label)};
}

Program::Program(std::vector<Instruction> instructions) : instructions_(std::move(instructions)) {
  for (std::size_t i = 0; i < instructions_.size(); ++i) {
    const auto& ins = instructions_[i];
    if (!is_valid_token(ins.variable))
      throw ParseError("invalid variable name '" + ins.variable + "'", 0);
    if ((ins.kind == OpKind::BranchNonzero) != ins.target.has_value())
      throw ParseError("branch target must be present exactly on IFNZ", 0);
    if (ins.target && !is_valid_token(*ins.target))
      throw ParseError("invalid label name '" + *ins.target + "'", 0);
    if (ins.label) {
      if (!is_valid_token(*ins.label))
        throw ParseError("invalid label name '" + *ins.label + "'", 0);
      if (!labels_.emplace(*ins.label, i).second)
        throw ParseError("duplicate label '" + *ins.label + "'", 0);
    }
  }
}

std::optional<std::size_t> Program::find_label(std::string_view label) const {
  auto it = labels_.find(label);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

Natural MachineState::get(std::string_view var) const {
  auto it = values.find(var);
  return it == values.end() ? 0 : it->second;
}

Program parse_program(std::string_view text) {
  std::vector<Instruction> out;
  std::map<std::string, std::size_t, std::less<>> label_lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::optional<std::string> label;
    if (auto colon = line.find(':'); colon != std::string_view::npos) {
      auto name = trim(line.substr(0, colon));
      if (!is_valid_token(name))
        throw ParseError("line " + std::to_string(line_no) + ": invalid label '" +
                             std::string(name) + "'",
                         line_no);
      if (auto [it, fresh] = label_lines.emplace(std::string(name), line_no); !fresh)
        throw ParseError("line " + std::to_string(line_no) + ": duplicate label '" +
                             std::string(name) + "' (first defined on line " +
                             std::to_string(it->second) + ")",
                         line_no);
      label = std::string(name);
      line = trim(line.substr(colon + 1));
    }

    auto tokens = split_ws(line);
    auto fail = [&](const std::string& msg) -> ParseError {
      return ParseError("line " + std::to_string(line_no) + ": " + msg, line_no);
    };
    if (tokens.empty()) throw fail("label without instruction");
    auto check_token = [&](std::string_view tok, const char* what) {
      if (!is_valid_token(tok)) throw fail(std::string("invalid ") + what + " '" + std::string(tok) + "'");
      return std::string(tok);
    };

    if (tokens[0] == "INC" || tokens[0] == "DEC") {
      if (tokens.size() != 2) throw fail("expected '" + std::string(tokens[0]) + " <var>'");
      auto var = check_token(tokens[1], "variable");
      out.push_back(tokens[0] == "INC" ? Instruction::inc(var, label) : Instruction::dec(var, label));
    } else if (tokens[0] == "IFNZ") {
      if (tokens.size() != 4 || tokens[2] != "GOTO") throw fail("expected 'IFNZ <var> GOTO <label>'");
      out.push_back(Instruction::branch(check_token(tokens[1], "variable"),
                                        check_token(tokens[3], "label"), label));
    } else {
      throw fail("unknown instruction '" + std::string(tokens[0]) + "'");
    }
  }
  return Program(std::move(out));
}

std::string render_program(const Program& program) {
  std::size_t width = 0;
  for (const auto& ins : program.instructions())
    if (ins.label) width = std::max(width, ins.label->size() + 2);
  std::ostringstream os;
  for (const auto& ins : program.instructions()) {
    std::string prefix = ins.label ? *ins.label + ":" : std::string();
    prefix.resize(width, ' ');
    os << prefix << render_op(ins) << '\n';
  }
  return os.str();
}

namespace {

void advance(const Program& program, MachineState& state) {
  const std::size_t pc = *state.pc;
  const Instruction& ins = program.instructions().at(pc);
  ++state.steps;
  state.pc = pc + 1;
  switch (ins.kind) {
    case OpKind::Increment:
      ++state.values[ins.variable];
      break;
    case OpKind::Decrement: {
      auto it = state.values.find(ins.variable);
      if (it != state.values.end() && it->second > 0) --it->second;
      break;
    }
    case OpKind::BranchNonzero:
      if (state.get(ins.variable) != 0) state.pc = program.find_label(*ins.target);
      break;
  }
  if (state.pc && *state.pc >= program.size()) state.pc.reset();
}

}  // namespace

MachineState step(const Program& program, const MachineState& state) {
  MachineState next = state;
  advance(program, next);
  return next;
}

RunOutcome run(const Program& program, std::span<const Natural> inputs, Natural fuel) {
  MachineState state;
  for (std::size_t i = 0; i < inputs.size(); ++i) state.values[input_name(i + 1)] = inputs[i];
  state.pc = program.empty() ? std::nullopt : std::optional<std::size_t>(0);
  while (!state.halted() && state.steps < fuel) advance(program, state);
  RunOutcome out;
  out.status = state.halted() ? RunStatus::Halted : RunStatus::FuelExhausted;
  out.output = state.get("Y");
  out.final_state = std::move(state);
  return out;
}

}  // namespace numlab::machine
