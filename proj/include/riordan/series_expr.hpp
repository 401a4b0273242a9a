// Copyright 2026 The riordan-toolkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "riordan/power_series.hpp"
#include "riordan/rational.hpp"

namespace riordan {

// Expression tree for closed-form series such as "(1-sqrt(1-4*x))/(2*x)".
//
// Grammar (x and z both name the variable; z is normalized to x):
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | base ('^' integer)?
//   base   := integer | 'x' | 'z' | '(' expr ')' | 'sqrt' '(' expr ')'
//
// '^' binds tighter than unary minus, so -x^2 negates x^2. There is no
// implicit multiplication: "2x" is a syntax error. A quotient of two integer
// literals is folded into a single rational literal at parse time, which is
// why "35/2" and "1/3" behave as numbers rather than series divisions.
struct SeriesExpr {
  enum class Kind { Literal, Variable, Negate, Add, Sub, Mul, Div, Pow, Sqrt };

  Kind kind;
  Rational value;            // Literal only
  unsigned long exponent = 0;  // Pow only
  std::unique_ptr<SeriesExpr> lhs;  // operand / left operand
  std::unique_ptr<SeriesExpr> rhs;  // right operand of binary nodes
  std::size_t position = 0;  // byte offset of the node's main token
};

using SeriesExprPtr = std::unique_ptr<SeriesExpr>;

// Raised when a series expression cannot be evaluated (division by a series
// with no invertible part, square root of a non-square, ...). The message
// always names the offending subexpression.
class EvalError : public Error {
 public:
  using Error::Error;
};

// Throws ParseError with a byte offset on lexical or syntax problems.
SeriesExprPtr parse_series_expr(std::string_view text);

// Expands the expression to `order` known coefficients. Expressions that
// divide by a power of x (such as the Catalan form above) temporarily lose
// coefficients; the evaluator re-expands the tree with a correspondingly
// larger working order, so the caller always receives the full `order`
// coefficients when they are determined by the expression.
PowerSeries evaluate(const SeriesExpr& expr, std::size_t order);

// Renders with the minimal parentheses that reparse to an identical tree:
// structurally_equal(*parse_series_expr(to_string(e)), e) holds for every
// tree this parser produces.
std::string to_string(const SeriesExpr& expr);

bool structurally_equal(const SeriesExpr& a, const SeriesExpr& b);

}  // namespace riordan
