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

#include "riordan/series_expr.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"

namespace riordan {

namespace {

constexpr unsigned long kMaxExponent = 1000000;

struct Token {
  enum class Kind { Integer, Variable, Sqrt, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::size_t pos;
  Integer value;  // Integer tokens only
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      tokens.push_back({Token::Kind::Integer, start, v});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
      std::string_view word = text.substr(i, j - i);
      if (word == "x" || word == "z") {
        tokens.push_back({Token::Kind::Variable, start, 0});
      } else if (word == "sqrt") {
        tokens.push_back({Token::Kind::Sqrt, start, 0});
      } else {
        throw ParseError("unknown token '" + std::string(word) + "'", start);
      }
      i = j;
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case '+': kind = Token::Kind::Plus; break;
      case '-': kind = Token::Kind::Minus; break;
      case '*': kind = Token::Kind::Star; break;
      case '/': kind = Token::Kind::Slash; break;
      case '^': kind = Token::Kind::Caret; break;
      case '(': kind = Token::Kind::LParen; break;
      case ')': kind = Token::Kind::RParen; break;
      default:
        throw ParseError("unknown token '" + std::string(1, c) + "'", start);
    }
    tokens.push_back({kind, start, 0});
    ++i;
  }
  tokens.push_back({Token::Kind::End, text.size(), 0});
  return tokens;
}

const char* describe(Token::Kind k) {
  switch (k) {
    case Token::Kind::Integer: return "integer";
    case Token::Kind::Variable: return "'x'";
    case Token::Kind::Sqrt: return "'sqrt'";
    case Token::Kind::Plus: return "'+'";
    case Token::Kind::Minus: return "'-'";
    case Token::Kind::Star: return "'*'";
    case Token::Kind::Slash: return "'/'";
    case Token::Kind::Caret: return "'^'";
    case Token::Kind::LParen: return "'('";
    case Token::Kind::RParen: return "')'";
    case Token::Kind::End: return "end of input";
  }
  return "?";
}

SeriesExprPtr make_node(SeriesExpr::Kind kind, std::size_t pos) {
  auto node = std::make_unique<SeriesExpr>();
  node->kind = kind;
  node->position = pos;
  return node;
}

SeriesExprPtr make_literal(Rational value, std::size_t pos) {
  auto node = make_node(SeriesExpr::Kind::Literal, pos);
  node->value = std::move(value);
  return node;
}

bool is_integer_literal(const SeriesExpr& e) {
  return e.kind == SeriesExpr::Kind::Literal && e.value.is_integer() && e.value.sign() >= 0;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  SeriesExprPtr parse() {
    SeriesExprPtr e = parse_expr();
    if (peek().kind != Token::Kind::End) {
      throw ParseError(std::string("unexpected token ") + describe(peek().kind), peek().pos);
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& advance() { return tokens_[index_++]; }

  bool accept(Token::Kind kind) {
    if (peek().kind == kind) {
      ++index_;
      return true;
    }
    return false;
  }

  void expect(Token::Kind kind, const char* what) {
    if (!accept(kind)) {
      throw ParseError(std::string("expected ") + what + ", found " + describe(peek().kind),
                       peek().pos);
    }
  }

  SeriesExprPtr parse_expr() {
    SeriesExprPtr left = parse_term();
    while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
      const Token& op = advance();
      SeriesExprPtr right = parse_term();
      auto node = make_node(op.kind == Token::Kind::Plus ? SeriesExpr::Kind::Add
                                                         : SeriesExpr::Kind::Sub,
                            op.pos);
      node->lhs = std::move(left);
      node->rhs = std::move(right);
      left = std::move(node);
    }
    return left;
  }

  SeriesExprPtr parse_term() {
    SeriesExprPtr left = parse_factor();
    while (peek().kind == Token::Kind::Star || peek().kind == Token::Kind::Slash) {
      const Token& op = advance();
      SeriesExprPtr right = parse_factor();
      // A ratio of integer literals is a number, not a series division.
      if (op.kind == Token::Kind::Slash && is_integer_literal(*left) &&
          is_integer_literal(*right) && !right->value.is_zero()) {
        left = make_literal(left->value / right->value, left->position);
        continue;
      }
      auto node = make_node(op.kind == Token::Kind::Star ? SeriesExpr::Kind::Mul
                                                         : SeriesExpr::Kind::Div,
                            op.pos);
      node->lhs = std::move(left);
      node->rhs = std::move(right);
      left = std::move(node);
    }
    return left;
  }

  SeriesExprPtr parse_factor() {
    if (peek().kind == Token::Kind::Minus) {
      const Token& op = advance();
      auto node = make_node(SeriesExpr::Kind::Negate, op.pos);
      node->lhs = parse_factor();
      return node;
    }
    SeriesExprPtr base = parse_base();
    if (peek().kind == Token::Kind::Caret) {
      const Token& op = advance();
      if (peek().kind != Token::Kind::Integer) {
        throw ParseError("expected a nonnegative integer exponent after '^'", peek().pos);
      }
      const Token& exp = advance();
      if (exp.value > kMaxExponent) {
        throw ParseError("exponent exceeds the supported bound of " +
                             std::to_string(kMaxExponent),
                         exp.pos);
      }
      auto node = make_node(SeriesExpr::Kind::Pow, op.pos);
      node->exponent = exp.value.convert_to<unsigned long>();
      node->lhs = std::move(base);
      return node;
    }
    return base;
  }

  SeriesExprPtr parse_base() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Token::Kind::Integer: {
        advance();
        return make_literal(Rational(tok.value), tok.pos);
      }
      case Token::Kind::Variable: {
        advance();
        return make_node(SeriesExpr::Kind::Variable, tok.pos);
      }
      case Token::Kind::LParen: {
        advance();
        SeriesExprPtr inner = parse_expr();
        expect(Token::Kind::RParen, "')'");
        return inner;
      }
      case Token::Kind::Sqrt: {
        advance();
        expect(Token::Kind::LParen, "'(' after sqrt");
        auto node = make_node(SeriesExpr::Kind::Sqrt, tok.pos);
        node->lhs = parse_expr();
        expect(Token::Kind::RParen, "')'");
        return node;
      }
      default:
        throw ParseError(std::string("unexpected token ") + describe(tok.kind), tok.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

int precedence(const SeriesExpr& e) {
  switch (e.kind) {
    case SeriesExpr::Kind::Add:
    case SeriesExpr::Kind::Sub:
      return 1;
    case SeriesExpr::Kind::Mul:
    case SeriesExpr::Kind::Div:
      return 2;
    case SeriesExpr::Kind::Negate:
      return 3;
    case SeriesExpr::Kind::Pow:
      return 4;
    case SeriesExpr::Kind::Literal:
    case SeriesExpr::Kind::Variable:
    case SeriesExpr::Kind::Sqrt:
      return 5;
  }
  return 5;
}

void render(const SeriesExpr& e, std::string& out);

void render_child(const SeriesExpr& child, int min_level, std::string& out) {
  if (precedence(child) < min_level) {
    out += '(';
    render(child, out);
    out += ')';
  } else {
    render(child, out);
  }
}

void render(const SeriesExpr& e, std::string& out) {
  switch (e.kind) {
    case SeriesExpr::Kind::Literal:
      if (e.value.is_integer() && e.value.sign() >= 0) {
        out += e.value.str();
      } else {
        // Folded rational literals keep their parentheses so that a
        // surrounding product reparses to the same tree.
        out += '(';
        out += e.value.str();
        out += ')';
      }
      return;
    case SeriesExpr::Kind::Variable:
      out += 'x';
      return;
    case SeriesExpr::Kind::Sqrt:
      out += "sqrt(";
      render(*e.lhs, out);
      out += ')';
      return;
    case SeriesExpr::Kind::Negate:
      out += '-';
      render_child(*e.lhs, 3, out);
      return;
    case SeriesExpr::Kind::Pow:
      render_child(*e.lhs, 5, out);
      out += '^';
      out += std::to_string(e.exponent);
      return;
    case SeriesExpr::Kind::Add:
    case SeriesExpr::Kind::Sub:
      render_child(*e.lhs, 1, out);
      out += e.kind == SeriesExpr::Kind::Add ? '+' : '-';
      render_child(*e.rhs, 2, out);
      return;
    case SeriesExpr::Kind::Mul:
    case SeriesExpr::Kind::Div:
      render_child(*e.lhs, 2, out);
      out += e.kind == SeriesExpr::Kind::Mul ? '*' : '/';
      render_child(*e.rhs, 3, out);
      return;
  }
}

PowerSeries eval_at(const SeriesExpr& e, std::size_t order);

// Division handles denominators that vanish at x = 0 by cancelling the
// common power of x first; that is what makes (1-sqrt(1-4*x))/(2*x) legal.
PowerSeries eval_div(const SeriesExpr& e, std::size_t order) {
  PowerSeries num = eval_at(*e.lhs, order);
  PowerSeries den = eval_at(*e.rhs, order);
  std::size_t w = den.valuation();
  if (w == den.order()) {
    throw NotInvertibleError("division by a series that is zero at this truncation");
  }
  if (w == 0) {
    return num / den;
  }
  if (num.valuation() < w) {
    throw NotInvertibleError("denominator vanishes to order " + std::to_string(w) +
                             " but the numerator does not");
  }
  return shift_div(num, w) / shift_div(den, w);
}

PowerSeries eval_node(const SeriesExpr& e, std::size_t order) {
  switch (e.kind) {
    case SeriesExpr::Kind::Literal:
      return PowerSeries::constant(e.value, order);
    case SeriesExpr::Kind::Variable:
      return PowerSeries::variable(order).truncated(order);
    case SeriesExpr::Kind::Negate:
      return -eval_at(*e.lhs, order);
    case SeriesExpr::Kind::Add:
      return eval_at(*e.lhs, order) + eval_at(*e.rhs, order);
    case SeriesExpr::Kind::Sub:
      return eval_at(*e.lhs, order) - eval_at(*e.rhs, order);
    case SeriesExpr::Kind::Mul:
      return eval_at(*e.lhs, order) * eval_at(*e.rhs, order);
    case SeriesExpr::Kind::Div:
      return eval_div(e, order);
    case SeriesExpr::Kind::Pow:
      return pow(eval_at(*e.lhs, order), e.exponent);
    case SeriesExpr::Kind::Sqrt:
      return sqrt(eval_at(*e.lhs, order));
  }
  throw Error("unreachable expression kind");
}

PowerSeries eval_at(const SeriesExpr& e, std::size_t order) {
  try {
    return eval_node(e, order);
  } catch (const EvalError&) {
    throw;  // already names the innermost offending subexpression
  } catch (const Error& err) {
    throw EvalError(std::string(err.what()) + " in subexpression '" + to_string(e) + "'");
  }
}

}  // namespace

SeriesExprPtr parse_series_expr(std::string_view text) { return Parser(text).parse(); }

PowerSeries evaluate(const SeriesExpr& expr, std::size_t order) {
  if (order == 0) {
    throw ConstructionError("evaluation order must be at least 1");
  }
  // Shift divisions and shifted square roots consume known coefficients.
  // The shortfall is independent of the working order, so re-expanding with
  // the deficit added recovers the requested width; a few rounds cover
  // nested shifts.
  std::size_t working = order;
  for (int attempt = 0; attempt < 4; ++attempt) {
    PowerSeries result = eval_at(expr, working);
    if (result.order() >= order) {
      return result.order() == order ? result : result.truncated(order);
    }
    working += order - result.order();
  }
  throw EvalError("expression '" + to_string(expr) + "' could not deliver " +
                  std::to_string(order) + " coefficients; raise the order");
}

std::string to_string(const SeriesExpr& expr) {
  std::string out;
  render(expr, out);
  return out;
}

bool structurally_equal(const SeriesExpr& a, const SeriesExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case SeriesExpr::Kind::Literal:
      return a.value == b.value;
    case SeriesExpr::Kind::Variable:
      return true;
    case SeriesExpr::Kind::Negate:
    case SeriesExpr::Kind::Sqrt:
      return structurally_equal(*a.lhs, *b.lhs);
    case SeriesExpr::Kind::Pow:
      return a.exponent == b.exponent && structurally_equal(*a.lhs, *b.lhs);
    case SeriesExpr::Kind::Add:
    case SeriesExpr::Kind::Sub:
    case SeriesExpr::Kind::Mul:
    case SeriesExpr::Kind::Div:
      return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
  }
  return false;
}

}  // namespace riordan
