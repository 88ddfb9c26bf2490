#include "rowmotion/rational.hpp"

#include <ostream>

#include "rowmotion/errors.hpp"

namespace rowmotion {

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) {
    throw DivisionByZero("rational " + numerator.get_str() + "/0");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  if (value_.get_den() == 0) throw DivisionByZero("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Rational::operator+(const Rational& rhs) const {
  return Rational(mpq_class(value_ + rhs.value_));
}

Rational Rational::operator-(const Rational& rhs) const {
  return Rational(mpq_class(value_ - rhs.value_));
}

Rational Rational::operator*(const Rational& rhs) const {
  return Rational(mpq_class(value_ * rhs.value_));
}

Rational Rational::operator/(const Rational& rhs) const {
  if (rhs.is_zero()) {
    throw DivisionByZero("division of " + to_string() + " by zero");
  }
  return Rational(mpq_class(value_ / rhs.value_));
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
  const int c = cmp(value_, rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inv(*this).pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational inv(const Rational& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero");
  return Rational(a.denominator(), a.numerator());
}

Rational parallel(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) {
    throw DivisionByZero("parallel sum with zero operand: " + a.to_string() + " || " +
                         b.to_string());
  }
  const Rational total = inv(a) + inv(b);
  if (total.is_zero()) {
    throw DivisionByZero("parallel sum of opposite operands: " + a.to_string() + " || " +
                         b.to_string());
  }
  return inv(total);
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(text, 10));
    const mpz_class num(text.substr(0, slash), 10);
    const mpz_class den(text.substr(slash + 1), 10);
    if (den == 0) throw DivisionByZero("rational literal with zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational literal: '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace rowmotion
