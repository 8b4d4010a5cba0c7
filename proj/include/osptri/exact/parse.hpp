#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "osptri/exact/ratfunc.hpp"

namespace osptri {

namespace detail {

/// Recursive-descent reader for rational expressions over the universe:
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' ['-'] digits)?
///   atom   := digits | identifier | '(' expr ')'
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
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

  RatFunc expr() {
    RatFunc acc = term();
    while (true) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = unary();
    while (true) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (!eat('^')) return base;
    bool neg = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (neg && base.is_zero()) fail("zero to a negative power");
    return base.pow(neg ? -static_cast<int>(e) : static_cast<int>(e));
  }

  static bool ident_char(char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '\'' || c == '_' || u >= 0x80;
  }

  RatFunc atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc(BigRat::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || static_cast<unsigned char>(c) >= 0x80) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      auto v = var_from_name(name);
      if (!v) fail("unknown variable '" + std::string(name) + "'");
      return RatFunc::var(*v);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a rational expression; unknown variable names are rejected.
inline RatFunc parse_ratfunc(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Parses a polynomial expression; throws ParseError if a division leaves a
/// non-constant denominator.
inline MultiPoly parse_poly(std::string_view text) {
  RatFunc r = parse_ratfunc(text);
  if (!r.is_polynomial()) throw ParseError("not a polynomial: '" + std::string(text) + "'");
  return r.num().scaled(BigRat(1) / BigRat(r.zden().constant_value()));
}

/// Exact rational literal "p", "-p", "p/q".
inline BigRat parse_rational(std::string_view text) { return BigRat::parse(text); }

}  // namespace osptri
