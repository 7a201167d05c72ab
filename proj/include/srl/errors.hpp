#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srl {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element outside the universe, or operands from different semirings.
struct domain_error : error {
  using error::error;
};

struct shape_error : error {
  using error::error;
};

struct argument_error : error {
  using error::error;
};

// Operation not defined for the semiring kind (e.g. enumerating an
// infinite universe).
struct unsupported_error : error {
  using error::error;
};

// A configured enumeration budget would be exceeded.
struct budget_error : error {
  using error::error;
};

struct internal_error : error {
  using error::error;
};

struct parse_error : error {
  std::size_t line;
  std::size_t column;

  parse_error(const std::string& msg, std::size_t line_, std::size_t column_)
      : error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

}  // namespace srl
