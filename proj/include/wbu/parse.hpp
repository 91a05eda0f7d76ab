#pragma once

// Text forms of field descriptors and polynomials.

#include <stdexcept>
#include <string>
#include <vector>

#include "wbu/mpoly.hpp"

namespace wbu {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses `QQ`, `GF(p)`, `GF(2)(t)`, `GF(2)(t)[θ]/(θ^2+t)` and longer chains.
FieldTower parse_field(const std::string& text);

/// Parses an expression in `+ - * ^ /`, integer literals, parentheses,
/// the given variables and the generators of `k`. Division is by
/// nonzero constants only.
Poly parse_poly(const std::string& text, const FieldTower& k, const std::vector<std::string>& vars);

/// Variables used by an expression that are not generators of `k`, in
/// order of first appearance.
std::vector<std::string> free_identifiers(const std::string& text, const FieldTower& k);

}  // namespace wbu
