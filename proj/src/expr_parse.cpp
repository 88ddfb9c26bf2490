#include "rowmotion/expr_parse.hpp"

#include <cctype>

#include "rowmotion/errors.hpp"

namespace rowmotion {
namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  RatFn parse() {
    RatFn value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  int small_integer() {
    const bool negative = accept('-');
    const std::string d = digits();
    if (d.size() > 6) fail("index too large");
    const int value = std::stoi(d);
    return negative ? -value : value;
  }

  RatFn expression() {
    RatFn value = term();
    while (true) {
      if (accept('+')) {
        value = value + term();
      } else if (accept('-')) {
        value = value - term();
      } else {
        return value;
      }
    }
  }

  RatFn term() {
    RatFn value = unary();
    while (true) {
      if (accept('*')) {
        value = value * unary();
      } else if (accept('/')) {
        const RatFn divisor = unary();
        if (divisor.is_zero()) fail("division by zero");
        value = value / divisor;
      } else {
        return value;
      }
    }
  }

  RatFn unary() {
    if (accept('-')) return -unary();
    return power();
  }

  RatFn power() {
    RatFn base = atom();
    if (accept('^')) {
      const int e = small_integer();
      if (e < 0 && base.is_zero()) fail("negative power of zero");
      return base.pow(e);
    }
    return base;
  }

  RatFn atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFn value = expression();
      expect(')');
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFn(Polynomial(mpz_class(digits(), 10)));
    if (c == 'x' || c == 'A') {
      ++pos_;
      expect('[');
      const int i = small_integer();
      expect(',');
      const int j = small_integer();
      expect(']');
      return RatFn(c == 'x' ? xvar(i, j) : avar(i, j));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFn parse_ratfn(const std::string& text) { return Parser(text).parse(); }

}  // namespace rowmotion
