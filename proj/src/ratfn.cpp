#include "rowmotion/ratfn.hpp"

#include <map>

#include "rowmotion/errors.hpp"

namespace rowmotion {
namespace {

Polynomial quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_one()) return a;
  auto q = a.divide_exact(b);
  if (!q) throw PreconditionViolated("inexact division " + a.to_string() + " / " + b.to_string());
  return *q;
}

}  // namespace

RatFn::RatFn(const Rational& q) : num_(q.numerator()), den_(q.denominator()) {}

RatFn::RatFn(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator: " + num.to_string() + "/0");
  if (num.is_zero()) {
    den_ = Polynomial(1L);
    return;
  }
  const Polynomial g = gcd(num, den);
  num_ = quotient(num, g);
  den_ = quotient(den, g);
  if (den_.leading_coefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFn::RatFn(Polynomial num, Polynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) den_ = Polynomial(1L);
  if (den_.leading_coefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFn RatFn::operator-() const { return RatFn(-num_, den_, Reduced{}); }

RatFn RatFn::operator+(const RatFn& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  if (den_ == rhs.den_) return RatFn(num_ + rhs.num_, den_);
  const Polynomial g = gcd(den_, rhs.den_);
  const Polynomial left = quotient(rhs.den_, g);
  const Polynomial right = quotient(den_, g);
  const Polynomial num = num_ * left + rhs.num_ * right;
  if (g.is_one()) return RatFn(num, den_ * rhs.den_, Reduced{});
  return RatFn(num, den_ * left);
}

RatFn RatFn::operator-(const RatFn& rhs) const { return *this + (-rhs); }

RatFn RatFn::operator*(const RatFn& rhs) const {
  if (is_zero() || rhs.is_zero()) return RatFn();
  const Polynomial g1 = gcd(num_, rhs.den_);
  const Polynomial g2 = gcd(rhs.num_, den_);
  return RatFn(quotient(num_, g1) * quotient(rhs.num_, g2),
               quotient(den_, g2) * quotient(rhs.den_, g1), Reduced{});
}

RatFn RatFn::operator/(const RatFn& rhs) const { return *this * inv(rhs); }

RatFn RatFn::pow(long exponent) const {
  if (exponent < 0) return inv(*this).pow(-exponent);
  const auto e = static_cast<unsigned>(exponent);
  return RatFn(num_.pow(e), den_.pow(e), Reduced{});
}

Rational RatFn::evaluate(const Point& point) const {
  const Rational d = den_.evaluate(point);
  const Rational n = num_.evaluate(point);
  if (d.is_zero()) throw PoleEncountered("denominator " + den_.to_string() + " vanishes");
  return n / d;
}

std::string RatFn::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string out = num_.term_count() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
  const bool bare = den_.is_variable() || den_.is_constant();
  out += '/';
  out += bare ? den_.to_string() : "(" + den_.to_string() + ")";
  return out;
}

RatFn inv(const RatFn& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of the zero function");
  return RatFn(a.den(), a.num());
}

RatFn parallel(const RatFn& a, const RatFn& b) {
  if (a.is_zero() || b.is_zero()) {
    throw DivisionByZero("parallel sum with zero operand: " + a.to_string() + " || " + b.to_string());
  }
  const RatFn total = inv(a) + inv(b);
  if (total.is_zero()) {
    throw DivisionByZero("parallel sum of opposite operands: " + a.to_string() + " || " + b.to_string());
  }
  return inv(total);
}

bool ratfn_equal(const RatFn& a, const RatFn& b) { return a.num() * b.den() == b.num() * a.den(); }

RatFn substitute(const Polynomial& p, const Bindings& bindings) {
  std::vector<VarId> missing;
  for (const VarId& v : p.variables()) {
    if (!bindings.count(v)) missing.push_back(v);
  }
  if (!missing.empty()) {
    std::string names;
    for (const auto& v : missing) names += (names.empty() ? "" : ", ") + v.to_string();
    throw UnboundVariable("substitution leaves unbound variables: " + names);
  }
  std::map<std::pair<VarId, int>, RatFn> powers;
  RatFn total;
  for (const auto& [m, c] : p.terms()) {
    RatFn term{Polynomial(c)};
    for (const auto& [v, e] : m.factors()) {
      auto key = std::make_pair(v, e);
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, bindings.at(v).pow(e)).first;
      term = term * it->second;
    }
    total = total + term;
  }
  return total;
}

RatFn substitute(const RatFn& f, const Bindings& bindings) {
  return substitute(f.num(), bindings) / substitute(f.den(), bindings);
}

RatFn rename(const RatFn& f, const std::map<VarId, VarId>& renaming) {
  return RatFn(f.num().rename(renaming), f.den().rename(renaming));
}

}  // namespace rowmotion
