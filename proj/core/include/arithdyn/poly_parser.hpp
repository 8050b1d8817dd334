#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "arithdyn/polynomial.hpp"

namespace arithdyn {

class PolyParseError : public std::invalid_argument {
 public:
  PolyParseError(std::size_t column, const std::string& what);
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Grammar (whitespace is insignificant):
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' digits)?
///   atom   := digits ('/' digits)? | name | '(' expr ')'
/// `p/q` is only accepted as a literal; there is no polynomial division.
MultiPoly parse_poly(std::string_view text, std::span<const std::string> vars);

}  // namespace arithdyn
