#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse multivariate polynomials over Z in the x- and A-variables.
 *
 * Terms are kept in graded-lexicographic order, largest first, so that
 * iteration order is also the rendering order and begin() is the leading
 * term.  Variables compare by (space, i, j); the smallest variable is the
 * most significant one for the lexicographic tie-break.
 */

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rowmotion/rational.hpp"

namespace rowmotion {

enum class VarSpace { X = 0, A = 1 };

struct VarId {
  VarSpace space = VarSpace::X;
  int i = 0;
  int j = 0;

  auto operator<=>(const VarId&) const = default;
  std::string to_string() const;
};

inline VarId xvar(int i, int j) { return {VarSpace::X, i, j}; }
inline VarId avar(int i, int j) { return {VarSpace::A, i, j}; }

using Point = std::map<VarId, Rational>;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(VarId v, int exponent = 1);
  /// Zero exponents are dropped; repeated variables are merged.
  explicit Monomial(std::vector<std::pair<VarId, int>> factors);

  const std::vector<std::pair<VarId, int>>& factors() const { return factors_; }
  int degree() const { return degree_; }
  int exponent(const VarId& v) const;
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& rhs) const;
  /// Quotient when rhs divides *this.
  std::optional<Monomial> divide(const Monomial& rhs) const;
  /// Componentwise minimum of exponents.
  Monomial gcd(const Monomial& rhs) const;
  Monomial without(const VarId& v) const;

  bool operator==(const Monomial& rhs) const = default;
  std::string to_string() const;

 private:
  std::vector<std::pair<VarId, int>> factors_;  // sorted by VarId, exponents > 0
  int degree_ = 0;
};

/// Strict weak order placing the grlex-larger monomial first.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

int grlex_compare(const Monomial& a, const Monomial& b);

class Polynomial {
 public:
  using Terms = std::map<Monomial, mpz_class, GrlexDescending>;

  Polynomial() = default;
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  Polynomial(const mpz_class& constant);  // NOLINT
  explicit Polynomial(VarId v);
  Polynomial(const Monomial& m, const mpz_class& coefficient);

  static Polynomial variable(VarId v) { return Polynomial(v); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// True for a single variable with coefficient 1.
  bool is_variable() const;
  std::size_t term_count() const { return terms_.size(); }

  /// Leading term under grlex.  Requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const mpz_class& leading_coefficient() const;
  mpz_class constant_term() const;
  /// gcd of all coefficients (0 for the zero polynomial), always >= 0.
  mpz_class integer_content() const;

  int total_degree() const;
  int degree_in(const VarId& v) const;
  std::set<VarId> variables() const;

  /// Coefficients c_d with *this = sum_d c_d v^d; index is the degree.
  std::vector<Polynomial> coefficients_in(const VarId& v) const;
  static Polynomial from_coefficients(const VarId& v, const std::vector<Polynomial>& coeffs);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }
  Polynomial pow(unsigned exponent) const;

  Polynomial scaled(const mpz_class& factor) const;
  /// Divides every coefficient by d; requires d to divide them all.
  Polynomial divided_by_integer(const mpz_class& d) const;
  Polynomial times_monomial(const Monomial& m) const;

  /// Exact quotient *this / divisor when it exists in Z[vars].
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  /// Renames variables; the map must be injective on variables().
  Polynomial rename(const std::map<VarId, VarId>& renaming) const;

  /// Throws UnboundVariable listing every missing variable.
  Rational evaluate(const Point& point) const;

  bool operator==(const Polynomial& rhs) const { return terms_ == rhs.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const mpz_class& c);
  Terms terms_;
};

/// Greatest common divisor in Z[vars], normalized to a positive leading
/// coefficient.  gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace rowmotion
