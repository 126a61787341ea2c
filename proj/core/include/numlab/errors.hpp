#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace numlab {

/// Malformed textual input. `where` is a 1-based line number or a 0-based
/// character offset depending on the format being parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t where)
      : std::runtime_error(what), where_(where) {}
  std::size_t where() const noexcept { return where_; }

 private:
  std::size_t where_;
};

/// An input exceeded one of the desk-scale size guards (degree, vertex count, ...).
class GuardViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A precondition on the mathematical content of an argument failed
/// (not irreducible, not prime, not connected, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace numlab
