#pragma once

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "rowmotion/expr_parse.hpp"
#include "rowmotion/ratfn.hpp"

namespace rowmotion::testing {

inline RatFn F(const std::string& text) { return parse_ratfn(text); }

inline ::testing::AssertionResult SameFunction(const RatFn& a, const RatFn& b) {
  if (ratfn_equal(a, b)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << a.to_string() << " != " << b.to_string();
}

// Small random polynomial in x[0..2,0..1] with coefficients in [-3, 3].
inline Polynomial random_polynomial(std::mt19937_64& rng, int max_terms = 3) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> index(0, 2);
  std::uniform_int_distribution<int> exponent(0, 2);
  Polynomial out;
  const int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<std::pair<VarId, int>> factors;
    for (int f = 0; f < 2; ++f) factors.emplace_back(xvar(index(rng), index(rng) % 2), exponent(rng));
    out += Polynomial(Monomial(factors), coeff(rng));
  }
  return out;
}

inline RatFn random_ratfn(std::mt19937_64& rng) {
  Polynomial den;
  while (den.is_zero()) den = random_polynomial(rng, 2);
  return RatFn(random_polynomial(rng), den);
}

inline Point random_x_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> value(-20, 20);
  std::uniform_int_distribution<long> den(1, 7);
  Point p;
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; j <= 1; ++j) p.emplace(xvar(i, j), Rational(mpz_class(value(rng)), mpz_class(den(rng))));
  }
  return p;
}

}  // namespace rowmotion::testing
