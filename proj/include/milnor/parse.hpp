// Text parser for polynomial germs.
//
// Grammar (whitespace-insensitive):
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coef | [coef ['*']] factor ('*'? factor)*
//   factor := var ['^' uint]
//   coef   := uint | uint '/' uint
// Variable names are ASCII identifiers declared by the caller. Coefficient
// signs come from the leading/binary '+'/'-' of the term.
#ifndef MILNOR_PARSE_HPP
#define MILNOR_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "milnor/errors.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

namespace detail {

struct Token {
  enum Kind { number, ident, plus, minus, star, caret, slash, end } kind = end;
  std::string text;
  std::size_t pos = 0;
};

inline std::vector<Token> lex_polynomial(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Token::number;
      t.text = std::string(text.substr(i, j - i));
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      t.kind = Token::ident;
      t.text = std::string(text.substr(i, j - i));
      i = j;
    } else {
      switch (c) {
        case '+': t.kind = Token::plus; break;
        case '-': t.kind = Token::minus; break;
        case '*': t.kind = Token::star; break;
        case '^': t.kind = Token::caret; break;
        case '/': t.kind = Token::slash; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", i);
      }
      t.text = std::string(1, c);
      ++i;
    }
    out.push_back(std::move(t));
  }
  Token fin;
  fin.kind = Token::end;
  fin.pos = text.size();
  out.push_back(fin);
  return out;
}

class PolyParser {
public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars)
      : tokens_(lex_polynomial(text)), nvars_(vars.size()) {
    for (std::size_t i = 0; i < vars.size(); ++i) index_[vars[i]] = i;
  }

  Polynomial parse() {
    Polynomial f(nvars_);
    int sign = 1;
    if (peek().kind == Token::plus || peek().kind == Token::minus) {
      sign = peek().kind == Token::minus ? -1 : 1;
      advance();
    }
    parse_term(f, sign);
    while (peek().kind != Token::end) {
      if (peek().kind == Token::plus) {
        sign = 1;
      } else if (peek().kind == Token::minus) {
        sign = -1;
      } else {
        throw ParseError("expected '+' or '-' between terms", peek().pos);
      }
      advance();
      parse_term(f, sign);
    }
    return f;
  }

private:
  const Token& peek() const { return tokens_[cursor_]; }
  void advance() { ++cursor_; }

  Rational parse_coefficient() {
    const Token& num = peek();
    Integer n(num.text);
    advance();
    if (peek().kind == Token::slash) {
      advance();
      if (peek().kind == Token::minus)
        throw ParseError("denominator must be an unsigned integer", peek().pos);
      if (peek().kind != Token::number)
        throw ParseError("expected denominator after '/'", peek().pos);
      Integer d(peek().text);
      if (sgn(d) == 0) throw ParseError("zero denominator", peek().pos);
      advance();
      return make_rational(n, d);
    }
    return Rational(n);
  }

  unsigned parse_exponent() {
    advance();  // consume '^'
    if (peek().kind == Token::minus) throw ParseError("negative exponent", peek().pos);
    if (peek().kind != Token::number) throw ParseError("expected exponent after '^'", peek().pos);
    if (peek().text.size() > 6) throw ParseError("exponent too large", peek().pos);
    const unsigned long e = std::stoul(peek().text);
    advance();
    return static_cast<unsigned>(e);
  }

  void parse_term(Polynomial& f, int sign) {
    Rational coef(1);
    bool saw_coef = false;
    if (peek().kind == Token::number) {
      coef = parse_coefficient();
      saw_coef = true;
      if (peek().kind == Token::star) {
        advance();
        if (peek().kind != Token::ident)
          throw ParseError("expected variable after '*'", peek().pos);
      }
    }
    Monomial m(nvars_);
    bool saw_factor = false;
    while (peek().kind == Token::ident) {
      auto it = index_.find(peek().text);
      if (it == index_.end())
        throw ParseError("unknown variable '" + peek().text + "'", peek().pos);
      const std::size_t v = it->second;
      advance();
      unsigned e = 1;
      if (peek().kind == Token::caret) e = parse_exponent();
      m[v] += e;
      saw_factor = true;
      if (peek().kind == Token::star) {
        advance();
        if (peek().kind != Token::ident)
          throw ParseError("expected variable after '*'", peek().pos);
      }
    }
    if (!saw_coef && !saw_factor) throw ParseError("expected a term", peek().pos);
    if (sign < 0) coef = -coef;
    f.add_term(m, coef);
  }

  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
  std::size_t nvars_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace detail

/// Parse a polynomial over the declared variables into canonical sparse form;
/// like terms are combined and zero terms dropped.
inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  return detail::PolyParser(text, vars).parse();
}

}  // namespace milnor

#endif
