#pragma once

/**
 * @file ratfn.hpp
 * @brief Rational functions num/den over Z[x, A].
 *
 * Every value is stored in lowest terms (gcd(num, den) = 1) with the
 * leading coefficient of den positive, so equal functions have identical
 * representations.  ratfn_equal still compares by cross-multiplication and
 * does not rely on this normalization.
 */

#include <map>
#include <string>

#include "rowmotion/polynomial.hpp"
#include "rowmotion/rational.hpp"

namespace rowmotion {

class RatFn {
 public:
  RatFn() : den_(1L) {}
  RatFn(long constant) : num_(constant), den_(1L) {}  // NOLINT(google-explicit-constructor)
  RatFn(const Polynomial& p) : num_(p), den_(1L) {}  // NOLINT
  explicit RatFn(const Rational& q);
  explicit RatFn(VarId v) : num_(v), den_(1L) {}
  /// Throws DivisionByZero when den is the zero polynomial.
  RatFn(const Polynomial& num, const Polynomial& den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFn operator-() const;
  RatFn operator+(const RatFn& rhs) const;
  RatFn operator-(const RatFn& rhs) const;
  RatFn operator*(const RatFn& rhs) const;
  /// Throws DivisionByZero when rhs is zero.
  RatFn operator/(const RatFn& rhs) const;
  RatFn& operator+=(const RatFn& rhs) { return *this = *this + rhs; }
  RatFn& operator*=(const RatFn& rhs) { return *this = *this * rhs; }
  RatFn pow(long exponent) const;

  /// Structural equality of the normalized representation.
  bool operator==(const RatFn& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }

  /// Throws UnboundVariable or PoleEncountered.
  Rational evaluate(const Point& point) const;

  /// Renders "num", "num/den" with parentheses around multi-term parts.
  std::string to_string() const;

 private:
  struct Reduced {};
  RatFn(Polynomial num, Polynomial den, Reduced);
  Polynomial num_;
  Polynomial den_;
};

RatFn inv(const RatFn& a);
/// a || b = ab / (a + b).  Throws DivisionByZero if a, b or a + b is zero.
RatFn parallel(const RatFn& a, const RatFn& b);

/// a.num * b.den == b.num * a.den.
bool ratfn_equal(const RatFn& a, const RatFn& b);

using Bindings = std::map<VarId, RatFn>;

/// Replaces every variable of f by its binding.  Throws UnboundVariable.
RatFn substitute(const RatFn& f, const Bindings& bindings);
/// Polynomial image under the bindings.
RatFn substitute(const Polynomial& p, const Bindings& bindings);

/// Independent renaming of variables, e.g. index shifts.
RatFn rename(const RatFn& f, const std::map<VarId, VarId>& renaming);

}  // namespace rowmotion
