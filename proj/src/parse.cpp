#include "prf/parse.hpp"

#include "prf/error.hpp"

#include <algorithm>
#include <cctype>

namespace prf {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int line, int column) : text_(text), line_(line), column_(column) {}

  MultiPoly parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '(')
        fail("implicit multiplication is not allowed; use '*'");
      fail(std::string("unexpected '") + peek() + "'");
    }
    return p.with_vars(vars_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, column_ + static_cast<int>(pos_));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        MultiPoly d = unary();
        if (!d.is_constant()) {
          pos_ = at;
          fail("division is only allowed by a constant");
        }
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc *= Rational(1) / d.constant_term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent after '^'");
      const auto digits = text_.substr(start, pos_ - start);
      if (digits.size() > 4) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(digits))));
    }
    return base;
  }

  MultiPoly atom() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return MultiPoly::constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) vars_.push_back(name);
      return MultiPoly::variable(name);
    }
    if (c == '\0') fail("unexpected end of expression");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  int line_;
  int column_;
  std::size_t pos_ = 0;
  std::vector<std::string> vars_;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, int line, int column) { return Parser(text, line, column).parse(); }

}  // namespace prf
