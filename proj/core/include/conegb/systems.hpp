#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conegb/polynomial.hpp"

namespace conegb {

/// Cyclic-n in x1..xn: sum_i prod_{j<k} x_{(i+j) mod n} for k = 1..n-1, and x1...xn - 1.
/// Throws std::invalid_argument for n < 2.
std::vector<Polynomial> generate_cyclic(std::size_t n);

/// Katsura-n in x0..xn, with x_{-i} = x_i and x_i = 0 for |i| > n:
/// sum_{i=-n}^{n} x_i x_{m-i} - x_m for m = 0..n-1, and sum_{i=-n}^{n} x_i - 1.
/// Throws std::invalid_argument for n < 1.
std::vector<Polynomial> generate_katsura(std::size_t n);

struct SystemFile {
  std::vector<std::string> variables;
  std::vector<Polynomial> polynomials;

  friend bool operator==(const SystemFile&, const SystemFile&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Reads `vars: name...` followed by one polynomial per line. `#` starts a
/// comment; blank lines are skipped. Throws ParseError (1-based line/column).
SystemFile parse_system(std::string_view text);
std::string render_system(const SystemFile& system);

}  // namespace conegb
