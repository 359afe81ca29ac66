#pragma once

// Textual format for algebra elements.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | <juxtaposition>) factor)*
//   factor := '-' factor | atom ('^' INT)?
//   atom   := IDENT | INT ('/' INT)? | '(' expr ')'
//           | '[' expr ',' expr ']' | '{' expr ',' expr '}'
//
// '^' binds tighter than unary minus, which binds tighter than products,
// so "-A^2" is -(A^2) and "2 A B" is 2*A*B. Identifiers are the names
// accepted by racah::named.

#include "racah/algebra.hpp"
#include "racah/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace racah::expr {

class ExprError : public std::runtime_error {
public:
  ExprError(const std::string& kind, std::size_t offset, const std::string& what)
      : std::runtime_error(kind + " at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

class LexError : public ExprError {
public:
  LexError(std::size_t offset, const std::string& what) : ExprError("lex error", offset, what) {}
};

class ParseError : public ExprError {
public:
  ParseError(std::size_t offset, const std::string& what)
      : ExprError("parse error", offset, what) {}
};

class ZeroDenominator : public ExprError {
public:
  explicit ZeroDenominator(std::size_t offset)
      : ExprError("zero denominator", offset, "rational literal with denominator 0") {}
};

enum class TokenKind {
  Ident, Int, Plus, Minus, Star, Caret, LParen, RParen,
  LBracket, RBracket, LBrace, RBrace, Comma, Slash, End
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;
};

inline std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < input.size()) {
    unsigned char ch = static_cast<unsigned char>(input[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(ch) || ch == '_') {
      while (i < input.size() &&
             (std::isalnum(static_cast<unsigned char>(input[i])) || input[i] == '_'))
        ++i;
      std::string name(input.substr(start, i - start));
      if (!is_named(name))
        throw LexError(start, "unknown identifier '" + name + "'");
      out.push_back({TokenKind::Ident, std::move(name), start});
      continue;
    }
    if (std::isdigit(ch)) {
      while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i])))
        ++i;
      out.push_back({TokenKind::Int, std::string(input.substr(start, i - start)), start});
      continue;
    }
    TokenKind kind;
    switch (ch) {
    case '+': kind = TokenKind::Plus; break;
    case '-': kind = TokenKind::Minus; break;
    case '*': kind = TokenKind::Star; break;
    case '^': kind = TokenKind::Caret; break;
    case '(': kind = TokenKind::LParen; break;
    case ')': kind = TokenKind::RParen; break;
    case '[': kind = TokenKind::LBracket; break;
    case ']': kind = TokenKind::RBracket; break;
    case '{': kind = TokenKind::LBrace; break;
    case '}': kind = TokenKind::RBrace; break;
    case ',': kind = TokenKind::Comma; break;
    case '/': kind = TokenKind::Slash; break;
    default:
      throw LexError(start, std::string("unexpected character '") + input[i] + "'");
    }
    out.push_back({kind, std::string(1, input[i]), start});
    ++i;
  }
  out.push_back({TokenKind::End, "", input.size()});
  return out;
}

struct Ast {
  enum class Kind { Sum, Product, Power, Neg, Commutator, Anticommutator, Scalar, Named };

  Kind kind;
  std::vector<Ast> children; // Sum: terms with signs folded into Neg nodes
  Rational scalar;           // Scalar
  std::string name;          // Named
  unsigned exponent = 0;     // Power

  static Ast leaf_scalar(Rational r) { return Ast{Kind::Scalar, {}, std::move(r), {}, 0}; }
  static Ast leaf_named(std::string n) { return Ast{Kind::Named, {}, {}, std::move(n), 0}; }
  static Ast node(Kind k, std::vector<Ast> c) { return Ast{k, std::move(c), {}, {}, 0}; }

  friend bool operator==(const Ast&, const Ast&) = default;
};

class Parser {
public:
  explicit Parser(std::string_view input) : tokens_(tokenize(input)) {}

  Ast parse() {
    Ast e = expr();
    if (peek().kind != TokenKind::End)
      throw ParseError(peek().position, "unexpected '" + peek().text + "'");
    return e;
  }

private:
  static constexpr unsigned kMaxExponent = 1000;

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  void expect(TokenKind kind, const char* what) {
    if (peek().kind != kind) {
      const Token& t = peek();
      throw ParseError(t.position, std::string("expected ") + what +
                                       (t.kind == TokenKind::End ? ", found end of input"
                                                                 : ", found '" + t.text + "'"));
    }
    ++pos_;
  }

  static bool starts_atom(TokenKind k) {
    return k == TokenKind::Ident || k == TokenKind::Int || k == TokenKind::LParen ||
           k == TokenKind::LBracket || k == TokenKind::LBrace;
  }

  Ast expr() {
    std::vector<Ast> terms{term()};
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      bool minus = next().kind == TokenKind::Minus;
      Ast t = term();
      terms.push_back(minus ? Ast::node(Ast::Kind::Neg, {std::move(t)}) : std::move(t));
    }
    if (terms.size() == 1)
      return std::move(terms.front());
    return Ast::node(Ast::Kind::Sum, std::move(terms));
  }

  Ast term() {
    std::vector<Ast> factors{factor()};
    for (;;) {
      if (peek().kind == TokenKind::Star) {
        ++pos_;
        factors.push_back(factor());
      } else if (starts_atom(peek().kind)) {
        factors.push_back(factor());
      } else {
        break;
      }
    }
    if (factors.size() == 1)
      return std::move(factors.front());
    return Ast::node(Ast::Kind::Product, std::move(factors));
  }

  Ast factor() {
    if (peek().kind == TokenKind::Minus) {
      ++pos_;
      return Ast::node(Ast::Kind::Neg, {factor()});
    }
    Ast a = atom();
    if (peek().kind == TokenKind::Caret) {
      ++pos_;
      const Token& t = peek();
      if (t.kind != TokenKind::Int)
        throw ParseError(t.position, "exponent must be a nonnegative integer literal");
      ++pos_;
      if (t.text.size() > 4 || std::stoul(t.text) > kMaxExponent)
        throw ParseError(t.position, "exponent too large");
      Ast p = Ast::node(Ast::Kind::Power, {std::move(a)});
      p.exponent = static_cast<unsigned>(std::stoul(t.text));
      return p;
    }
    return a;
  }

  Ast atom() {
    const Token& t = peek();
    switch (t.kind) {
    case TokenKind::Ident:
      ++pos_;
      return Ast::leaf_named(t.text);
    case TokenKind::Int: {
      ++pos_;
      mpz_class num(t.text), den(1);
      if (peek().kind == TokenKind::Slash) {
        ++pos_;
        const Token& d = peek();
        if (d.kind != TokenKind::Int)
          throw ParseError(d.position, "expected integer denominator");
        ++pos_;
        den = mpz_class(d.text);
        if (den == 0)
          throw ZeroDenominator(d.position);
      }
      return Ast::leaf_scalar(Rational(num, den));
    }
    case TokenKind::LParen: {
      ++pos_;
      Ast e = expr();
      expect(TokenKind::RParen, "')'");
      return e;
    }
    case TokenKind::LBracket:
    case TokenKind::LBrace: {
      bool comm = t.kind == TokenKind::LBracket;
      ++pos_;
      Ast x = expr();
      expect(TokenKind::Comma, "','");
      Ast y = expr();
      expect(comm ? TokenKind::RBracket : TokenKind::RBrace, comm ? "']'" : "'}'");
      return Ast::node(comm ? Ast::Kind::Commutator : Ast::Kind::Anticommutator,
                       {std::move(x), std::move(y)});
    }
    case TokenKind::End:
      throw ParseError(t.position, "unexpected end of input");
    default:
      throw ParseError(t.position, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

inline Ast parse_ast(std::string_view input) { return Parser(input).parse(); }

/// Free-algebra value of the tree. Named elements expand through
/// racah::named; nothing else is reduced.
inline NcPoly evaluate(const Ast& ast) {
  switch (ast.kind) {
  case Ast::Kind::Scalar:
    return NcPoly(ast.scalar);
  case Ast::Kind::Named:
    return named(ast.name);
  case Ast::Kind::Neg:
    return -evaluate(ast.children[0]);
  case Ast::Kind::Sum: {
    NcPoly s;
    for (const Ast& c : ast.children)
      s += evaluate(c);
    return s;
  }
  case Ast::Kind::Product: {
    NcPoly p(1);
    for (const Ast& c : ast.children)
      p = p * evaluate(c);
    return p;
  }
  case Ast::Kind::Power:
    return pow(evaluate(ast.children[0]), ast.exponent);
  case Ast::Kind::Commutator:
    return commutator(evaluate(ast.children[0]), evaluate(ast.children[1]));
  case Ast::Kind::Anticommutator:
    return anticommutator(evaluate(ast.children[0]), evaluate(ast.children[1]));
  }
  return {};
}

/// Parses `input` into an unreduced free-algebra polynomial.
inline NcPoly parse(std::string_view input) { return evaluate(parse_ast(input)); }

/// "A^2 B alpha"; runs of equal letters collapse to powers.
inline std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i])
      ++j;
    if (!out.empty())
      out += ' ';
    out += letter_name(w[i]);
    if (j - i > 1)
      out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

/// Canonical text. Normal-form input is ordered by filtration degree, then
/// exponent tuple descending; other input by word length, then rank order.
/// The output parses back to the same polynomial.
inline std::string print_canonical(const NcPoly& p) {
  if (p.is_zero())
    return "0";

  std::vector<std::pair<const Word*, const Rational*>> terms;
  for (const auto& [w, c] : p)
    terms.emplace_back(&w, &c);
  if (p.is_normal()) {
    std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
      unsigned wx = x.first->weight(), wy = y.first->weight();
      if (wx != wy)
        return wx < wy;
      return x.first->exponents() > y.first->exponents();
    });
  }

  std::string out;
  for (const auto& [w, c] : terms) {
    const bool negative = c->sign() < 0;
    const Rational mag = c->abs();
    std::string body;
    if (w->empty())
      body = mag.to_string();
    else if (mag.is_one())
      body = format_word(*w);
    else
      body = mag.to_string() + ' ' + format_word(*w);

    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

} // namespace racah::expr
