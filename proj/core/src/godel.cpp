#include "numlab/godel.hpp"

#include <map>
#include <string>
#include <vector>

#include "numlab/sets.hpp"

namespace numlab::reductions {

using machine::Instruction;
using machine::OpKind;
using machine::Program;

namespace {

// Index of an input variable name "X<i>" (i >= 1, no leading zeros), else 0.
BigInt input_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'X' || name[1] == '0') return 0;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (name[i] < '0' || name[i] > '9') return 0;
  return BigInt(name.substr(1));
}

class SymbolTable {
 public:
  explicit SymbolTable(const Program& p) {
    for (const auto& ins : p.instructions()) {
      if (ins.label) label(*ins.label);
      var(ins.variable);
      if (ins.target) label(*ins.target);
    }
  }

  BigInt var(const std::string& name) {
    if (name == "Y") return 0;
    if (BigInt i = input_index(name); i > 0) return 2 * i - 1;
    auto [it, fresh] = scratch_.emplace(name, 0);
    if (fresh) it->second = 2 * static_cast<long>(scratch_.size());
    return it->second;
  }

  BigInt label(const std::string& name) {
    auto [it, fresh] = labels_.emplace(name, 0);
    if (fresh) it->second = static_cast<long>(labels_.size() - 1);
    return it->second;
  }

 private:
  std::map<std::string, BigInt> scratch_;
  std::map<std::string, BigInt> labels_;
};

std::string var_name(const BigInt& v) {
  if (v == 0) return "Y";
  if (mpz_odd_p(v.get_mpz_t())) return "X" + BigInt((v + 1) / 2).get_str();
  return "Z" + BigInt(v / 2).get_str();
}

std::string label_name(const BigInt& l) { return "L" + l.get_str(); }

BigInt instruction_code(const Instruction& ins, SymbolTable& table) {
  BigInt slot = ins.label ? table.label(*ins.label) + 1 : BigInt(0);
  BigInt v = table.var(ins.variable);
  BigInt op;
  switch (ins.kind) {
    case OpKind::Increment:
      op = 3 * v;
      break;
    case OpKind::Decrement:
      op = 3 * v + 1;
      break;
    case OpKind::BranchNonzero:
      op = 3 * sets::pair(v, table.label(*ins.target)) + 2;
      break;
  }
  return sets::pair(slot, op);
}

}  // namespace

BigInt encode_program(const Program& program) {
  SymbolTable table(program);
  std::vector<BigInt> codes;
  codes.reserve(program.size());
  for (const auto& ins : program.instructions()) codes.push_back(instruction_code(ins, table));
  // cons-list: [] -> 0, c :: rest -> 1 + pair(c, rest)
  BigInt acc = 0;
  for (auto it = codes.rbegin(); it != codes.rend(); ++it) acc = 1 + sets::pair(*it, acc);
  return acc;
}

Program decode_program(const BigInt& n) {
  std::vector<Instruction> out;
  std::map<BigInt, bool> used_labels;
  BigInt rest = n;
  while (rest != 0) {
    auto [code, tail] = sets::unpair(BigInt(rest - 1));
    rest = tail;
    auto [slot, op] = sets::unpair(code);

    std::optional<std::string> label;
    if (slot != 0) {
      BigInt idx = slot - 1;
      if (!used_labels[idx]) {
        used_labels[idx] = true;
        label = label_name(idx);
      }
    }
    BigInt payload = op / 3;
    const unsigned long kind = BigInt(op % 3).get_ui();
    if (kind == 0) {
      out.push_back(Instruction::inc(var_name(payload), label));
    } else if (kind == 1) {
      out.push_back(Instruction::dec(var_name(payload), label));
    } else {
      auto [v, target] = sets::unpair(payload);
      out.push_back(Instruction::branch(var_name(v), label_name(target), label));
    }
  }
  return Program(std::move(out));
}

Program canonical_renaming(const Program& program) {
  SymbolTable table(program);
  std::vector<Instruction> out;
  out.reserve(program.size());
  for (const auto& ins : program.instructions()) {
    Instruction c = ins;
    c.variable = var_name(table.var(ins.variable));
    if (ins.label) c.label = label_name(table.label(*ins.label));
    if (ins.target) c.target = label_name(table.label(*ins.target));
    out.push_back(std::move(c));
  }
  return Program(std::move(out));
}

}  // namespace numlab::reductions
