#pragma once

// Interpreter for the three-instruction counter-machine language:
//
//   INC V            V <- V + 1
//   DEC V            V <- V - 1   (monus: 0 stays 0)
//   IFNZ V GOTO L    jump to the instruction labelled L when V != 0
//
// Inputs are bound to X1..Xn, the result is read from Y. A program halts by
// running past its last instruction or by jumping to a label it does not
// define.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace numlab::machine {

using Natural = std::uint64_t;

enum class OpKind { Increment, Decrement, BranchNonzero };

struct Instruction {
  OpKind kind = OpKind::Increment;
  std::string variable;
  std::optional<std::string> target;  // present iff kind == BranchNonzero
  std::optional<std::string> label;

  static Instruction inc(std::string var, std::optional<std::string> label = {});
  static Instruction dec(std::string var, std::optional<std::string> label = {});
  static Instruction branch(std::string var, std::string target,
                            std::optional<std::string> label = {});

  bool operator==(const Instruction&) const = default;
};

/// Immutable, validated instruction sequence.
class Program {
 public:
  Program() = default;
  /// Throws ParseError (line 0) on duplicate labels or a malformed instruction.
  explicit Program(std::vector<Instruction> instructions);

  const std::vector<Instruction>& instructions() const noexcept { return instructions_; }
  std::size_t size() const noexcept { return instructions_.size(); }
  bool empty() const noexcept { return instructions_.empty(); }

  /// Index of the instruction carrying `label`, if any.
  std::optional<std::size_t> find_label(std::string_view label) const;

  bool operator==(const Program& other) const { return instructions_ == other.instructions_; }

 private:
  std::vector<Instruction> instructions_;
  std::map<std::string, std::size_t, std::less<>> labels_;
};

struct MachineState {
  std::map<std::string, Natural, std::less<>> values;
  std::optional<std::size_t> pc = 0;  // nullopt: halted
  Natural steps = 0;

  bool halted() const noexcept { return !pc.has_value(); }
  /// Unmentioned variables read as 0.
  Natural get(std::string_view var) const;

  bool operator==(const MachineState&) const = default;
};

enum class RunStatus { Halted, FuelExhausted };

struct RunOutcome {
  RunStatus status = RunStatus::Halted;
  Natural output = 0;
  MachineState final_state;
};

/// Parses the line-oriented program text. Errors carry the 1-based line number.
Program parse_program(std::string_view text);

/// Canonical text form; `parse_program(render_program(p)) == p`.
std::string render_program(const Program& program);

/// Executes exactly one instruction. Precondition: `!state.halted()`.
MachineState step(const Program& program, const MachineState& state);

/// Binds `inputs` to X1..Xn and steps at most `fuel` times.
RunOutcome run(const Program& program, std::span<const Natural> inputs, Natural fuel);

/// True when `name` matches [A-Za-z][A-Za-z0-9]*.
bool is_valid_token(std::string_view name) noexcept;

/// Name of the i-th input variable (1-based): "X1", "X2", ...
std::string input_name(std::size_t i);

}  // namespace numlab::machine
