#include "acsv/parse.hpp"

#include <cctype>

namespace acsv {
namespace {

struct Token {
  enum Kind { kNumber, kIdent, kOp, kEnd } kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    std::size_t j = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::kNumber, std::string(text.substr(i, j - i)), line, column});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '_')) {
        ++j;
      }
      out.push_back({Token::kIdent, std::string(text.substr(i, j - i)), line, column});
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      j = i + 1;
      out.push_back({Token::kOp, std::string(1, c), line, column});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, column);
    }
    advance(j - i);
  }
  out.push_back({Token::kEnd, "", line, column});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const RingPtr& ring)
      : tokens_(std::move(tokens)), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expression();
    if (peek().kind != Token::kEnd) {
      throw ParseError("unexpected '" + peek().text + "'", peek().line, peek().column);
    }
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  bool at_op(char c) const {
    return peek().kind == Token::kOp && peek().text[0] == c;
  }

  // Reports a missing operand at the operator that needed it.
  [[noreturn]] void missing_operand() const {
    const Token& t = pos_ > 0 ? tokens_[pos_ - 1] : tokens_[0];
    if (peek().kind == Token::kEnd) {
      throw ParseError("syntax error: expected operand after '" + t.text + "'",
                       t.line, t.column);
    }
    throw ParseError("syntax error: unexpected '" + peek().text + "'", peek().line,
                     peek().column);
  }

  Polynomial expression() {
    Polynomial acc = product();
    while (at_op('+') || at_op('-')) {
      bool minus = take().text[0] == '-';
      Polynomial rhs = product();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = unary();
    while (true) {
      if (at_op('*')) {
        take();
        acc *= unary();
      } else if (at_op('/')) {
        const Token& op = take();
        Polynomial rhs = unary();
        if (!rhs.is_constant() || rhs.is_zero()) {
          throw ParseError("division only by a nonzero constant", op.line, op.column);
        }
        acc *= Rational(1 / rhs.constant_term());
      } else if (peek().kind == Token::kNumber || peek().kind == Token::kIdent ||
                 at_op('(')) {
        throw ParseError("implicit multiplication is not allowed before '" +
                             peek().text + "'",
                         peek().line, peek().column);
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (at_op('-')) {
      take();
      return -unary();
    }
    if (at_op('+')) {
      take();
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (at_op('^')) {
      const Token& op = take();
      if (peek().kind != Token::kNumber) {
        if (peek().kind == Token::kEnd) {
          throw ParseError("syntax error: expected exponent after '^'", op.line, op.column);
        }
        throw ParseError("exponent must be a nonnegative integer", peek().line,
                         peek().column);
      }
      const Token& e = take();
      if (e.text.size() > 5 || std::stoul(e.text) > 65535) {
        throw ParseError("exponent too large", e.line, e.column);
      }
      base = base.pow(static_cast<unsigned>(std::stoul(e.text)));
    }
    return base;
  }

  Polynomial atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::kNumber:
        take();
        return Polynomial(ring_, Rational(Integer(t.text)));
      case Token::kIdent: {
        take();
        int idx = ring_->index_of(t.text);
        if (idx < 0) {
          throw ParseError("unknown identifier '" + t.text + "'", t.line, t.column);
        }
        return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
      }
      case Token::kOp:
        if (t.text[0] == '(') {
          take();
          Polynomial inner = expression();
          if (!at_op(')')) {
            if (peek().kind == Token::kEnd) {
              throw ParseError("syntax error: missing ')'", t.line, t.column);
            }
            throw ParseError("syntax error: expected ')'", peek().line, peek().column);
          }
          take();
          return inner;
        }
        missing_operand();
      case Token::kEnd:
        if (pos_ == 0) throw ParseError("empty expression", t.line, t.column);
        missing_operand();
    }
    missing_operand();
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  RingPtr ring_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(tokenize(text), ring).parse();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text,
                                              const RingPtr& ring) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t\r\n") != std::string_view::npos) {
      out.push_back(parse_polynomial(piece, ring));
    }
    start = end + 1;
  }
  return out;
}

}  // namespace acsv
