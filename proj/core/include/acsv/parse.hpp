#ifndef ACSV_PARSE_HPP
#define ACSV_PARSE_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "acsv/polynomial.hpp"

namespace acsv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses `+ - * / ^`, parentheses, integer literals and identifiers.
/// Division is only allowed by a nonzero constant, which covers `a/b`
/// rational literals. Multiplication must be explicit.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Parses a `;`-separated list; empty entries are skipped.
std::vector<Polynomial> parse_polynomial_list(std::string_view text,
                                              const RingPtr& ring);

}  // namespace acsv

#endif  // ACSV_PARSE_HPP
