#pragma once

// Typed expression language over the algebras.
//
//   expr    := sum
//   sum     := product (('+' | '-') product)*
//   product := unary (('^' | '*') unary | atom)*      left-associative
//   unary   := '-' unary | atom
//   atom    := literal | generator | call | '(' expr ')'
//   literal := digits ('.' digits)? ('E' [+-]? digits)? ('/' digits)? 'i'?
//            | 'i' | 'sqrt2'
//   generator := 'e' digits | 'v' digits
//   call    := name '(' expr (',' expr)* ')'
//
// Juxtaposition ("(1/2) e1 e2") scales when either side is a scalar and is a
// Clifford product otherwise. '^' and '*' may not share an unparenthesized
// chain. Every node is assigned a sort while parsing.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fermicalc/scalar.hpp"

namespace fermicalc::cli {

/// Scalar, grade <= 1 element (promotes to either algebra), exterior element,
/// Clifford element.
enum class Sort { scalar, vec, ext, cl };

std::string sort_name(Sort s);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct Expr {
  enum class Kind { literal, generator, negate, add, sub, wedge, clifford, scale, call };

  Kind kind = Kind::literal;
  Sort sort = Sort::scalar;
  std::size_t offset = 0;

  ExactScalar value;         // literal
  char family = 'e';         // generator: 'e' or 'v'
  std::size_t index = 0;     // generator, 1-based
  std::string callee;        // call
  std::vector<Expr> args;    // operands / call arguments
};

struct ParseOptions {
  std::size_t half_dim = 2;
};

Expr parse(std::string_view input, const ParseOptions& options = {});

/// Debug rendering, e.g. "call(E, wedge(e1, e2))".
std::string to_string(const Expr& e);

}  // namespace fermicalc::cli
