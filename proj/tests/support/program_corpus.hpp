#pragma once

// The 50-program corpus for numbering tests: the fixtures followed by seeded
// random programs, distinct up to canonical renaming.

#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "numlab/godel.hpp"
#include "numlab/machine.hpp"

namespace numlab::testing {

inline std::vector<machine::Program> program_corpus(std::size_t size = 50) {
  using machine::Instruction;
  std::vector<machine::Program> out;
  std::set<std::string> seen;
  auto add = [&](const machine::Program& p) {
    if (out.size() < size && seen.insert(machine::render_program(reductions::canonical_renaming(p))).second)
      out.push_back(p);
  };
  add(machine::Program{});
  for (const char* name : {"add.prog", "mul.prog", "loop.prog"}) add(machine::parse_program(read_fixture(name)));

  auto gen = rng(50);
  const std::vector<std::string> vars{"Y", "X1", "X2", "T", "U"};
  const std::vector<std::string> labels{"A", "B", "C"};
  while (out.size() < size) {
    const std::size_t len = 1 + gen() % 6;
    std::vector<Instruction> ins;
    std::set<std::string> used;
    for (std::size_t i = 0; i < len; ++i) {
      std::optional<std::string> label;
      const std::string& l = labels[gen() % labels.size()];
      if (gen() % 3 == 0 && used.insert(l).second) label = l;
      const std::string& v = vars[gen() % vars.size()];
      switch (gen() % 3) {
        case 0: ins.push_back(Instruction::inc(v, label)); break;
        case 1: ins.push_back(Instruction::dec(v, label)); break;
        default: ins.push_back(Instruction::branch(v, labels[gen() % labels.size()], label)); break;
      }
    }
    add(machine::Program(ins));
  }
  return out;
}

}  // namespace numlab::testing
