#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers backed by GMP.
 *
 * Values are always canonical: the denominator is positive and coprime to
 * the numerator, and zero is 0/1.  Rendering is "p/q", or "p" when q = 1.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace rowmotion {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& value) : value_(value) {}  // NOLINT
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpq_class& value);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_positive() const { return sgn(value_) > 0; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational operator+(const Rational& rhs) const;
  Rational operator-(const Rational& rhs) const;
  Rational operator*(const Rational& rhs) const;
  /// Throws DivisionByZero when rhs is zero.
  Rational operator/(const Rational& rhs) const;

  Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
  Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
  Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
  Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

  bool operator==(const Rational& rhs) const { return value_ == rhs.value_; }
  std::strong_ordering operator<=>(const Rational& rhs) const;

  /// Integer power; negative exponents invert (DivisionByZero on zero).
  Rational pow(long exponent) const;

  std::string to_string() const;

 private:
  mpq_class value_{0};
};

Rational inv(const Rational& a);
/// a || b = 1 / (1/a + 1/b).  Requires a, b and a + b nonzero.
Rational parallel(const Rational& a, const Rational& b);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Parses "p", "-p" or "p/q" (q nonzero).  Throws ParseError.
Rational parse_rational(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace rowmotion
