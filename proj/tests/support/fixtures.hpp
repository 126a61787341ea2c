#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace numlab::testing {

inline std::string fixture_path(const std::string& name) { return std::string(NUMLAB_DATA_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Fixed seed so property failures reproduce.
inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x6e756d6c6162ULL ^ salt); }

}  // namespace numlab::testing
