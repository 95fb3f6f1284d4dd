#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "isomono/errors.hpp"
#include "isomono/exact/frac.hpp"

namespace isomono::exact {

// Recursive-descent reader for rational expressions over a variable set:
// integers, variable names, + - * / ^ (integer exponent) and parentheses.
template <class Vars>
class ExprParser {
 public:
  using F = Frac<Vars>;

  explicit ExprParser(std::string_view src) : s_(src) {}

  F parse() {
    F r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError,
                msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  F expr() {
    F r = term();
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }
  F term() {
    F r = unary();
    for (;;) {
      if (eat('*')) r *= unary();
      else if (eat('/')) r /= unary();
      else return r;
    }
  }
  F unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  F power() {
    F base = atom();
    if (eat('^')) {
      bool neg = eat('-');
      skip();
      long e = integer();
      return base.pow(static_cast<int>(neg ? -e : e));
    }
    return base;
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  F atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      F r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer v(std::string(s_.substr(start, pos_ - start)));
      return F(Rational(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      auto name = s_.substr(start, pos_ - start);
      auto v = lookup_var<Vars>(name);
      if (!v) fail("unknown symbol '" + std::string(name) + "'");
      return F::var(*v);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

template <class Vars>
Frac<Vars> parse_frac(std::string_view src) {
  return ExprParser<Vars>(src).parse();
}

template <class Vars>
Poly<Vars> parse_poly(std::string_view src) {
  Frac<Vars> f = parse_frac<Vars>(src);
  if (!f.is_polynomial()) throw Error(ErrorKind::ParseError, "expected a polynomial: " + std::string(src));
  return f.num();
}

}  // namespace isomono::exact
