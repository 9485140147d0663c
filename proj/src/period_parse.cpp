#include <cctype>
#include <string>

#include "mlv/error.hpp"
#include "mlv/period.hpp"

namespace mlv {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  PeriodValue parse_all() {
    PeriodValue v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorCode::ParseError, msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PeriodValue expr() {
    PeriodValue v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  PeriodValue term() {
    PeriodValue v = unary();
    for (;;) {
      if (accept('*'))
        v *= unary();
      else if (accept('/'))
        v /= unary();
      else
        return v;
    }
  }

  PeriodValue unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  PeriodValue power() {
    PeriodValue base = primary();
    if (!accept('^')) return base;
    bool paren = accept('(');
    bool neg = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    return base.pow(neg ? -e : e);
  }

  PeriodValue primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      PeriodValue v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return PeriodValue(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      if (name == "i") return PeriodValue::imaginary_unit();
      if (auto id = find_symbol(name)) return PeriodValue::symbol(*id);
      try {
        return PeriodValue::symbol(declare_symbol(name));
      } catch (const Error& e) {
        fail(e.what());
      }
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PeriodValue PeriodValue::parse(std::string_view text) { return Parser(text).parse_all(); }

mpq_class parse_rational(std::string_view text) {
  PeriodValue v = PeriodValue::parse(text);
  if (!v.is_rational()) throw Error(ErrorCode::ParseError, "expected a rational number, got '" + std::string(text) + "'");
  return v.rational_value();
}

}  // namespace mlv
