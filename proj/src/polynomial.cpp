#include "rowmotion/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "rowmotion/errors.hpp"

namespace rowmotion {

std::string VarId::to_string() const {
  std::ostringstream os;
  os << (space == VarSpace::X ? "x[" : "A[") << i << ',' << j << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(VarId v, int exponent) {
  if (exponent < 0) throw PreconditionViolated("negative exponent in monomial");
  if (exponent > 0) {
    factors_.emplace_back(v, exponent);
    degree_ = exponent;
  }
}

Monomial::Monomial(std::vector<std::pair<VarId, int>> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [v, e] : factors) {
    if (e < 0) throw PreconditionViolated("negative exponent in monomial");
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v) {
      factors_.back().second += e;
    } else {
      factors_.emplace_back(v, e);
    }
    degree_ += e;
  }
}

int Monomial::exponent(const VarId& v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const auto& f, const VarId& key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + rhs.factors_.size());
  auto a = factors_.begin();
  auto b = rhs.factors_.begin();
  while (a != factors_.end() || b != rhs.factors_.end()) {
    if (b == rhs.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + rhs.degree_;
  return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& rhs) const {
  Monomial out;
  auto a = factors_.begin();
  for (const auto& [v, e] : rhs.factors_) {
    while (a != factors_.end() && a->first < v) out.factors_.push_back(*a++);
    if (a == factors_.end() || a->first != v || a->second < e) return std::nullopt;
    if (a->second > e) out.factors_.emplace_back(v, a->second - e);
    ++a;
  }
  while (a != factors_.end()) out.factors_.push_back(*a++);
  out.degree_ = degree_ - rhs.degree_;
  return out;
}

Monomial Monomial::gcd(const Monomial& rhs) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = rhs.factors_.begin();
  while (a != factors_.end() && b != rhs.factors_.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      const int e = std::min(a->second, b->second);
      out.factors_.emplace_back(a->first, e);
      out.degree_ += e;
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::without(const VarId& v) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first == v) continue;
    out.factors_.push_back(f);
    out.degree_ += f.second;
  }
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += '*';
    out += v.to_string();
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t ia = 0;
  std::size_t ib = 0;
  while (ia < fa.size() && ib < fb.size()) {
    if (fa[ia].first != fb[ib].first) {
      // The monomial holding the smaller (more significant) variable wins.
      return fa[ia].first < fb[ib].first ? 1 : -1;
    }
    if (fa[ia].second != fb[ib].second) return fa[ia].second > fb[ib].second ? 1 : -1;
    ++ia;
    ++ib;
  }
  if (ia < fa.size()) return 1;
  if (ib < fb.size()) return -1;
  return 0;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  return grlex_compare(a, b) > 0;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(long constant) {
  if (constant != 0) terms_.emplace(Monomial(), mpz_class(constant));
}

Polynomial::Polynomial(const mpz_class& constant) {
  if (constant != 0) terms_.emplace(Monomial(), constant);
}

Polynomial::Polynomial(VarId v) { terms_.emplace(Monomial(v), mpz_class(1)); }

Polynomial::Polynomial(const Monomial& m, const mpz_class& coefficient) {
  if (coefficient != 0) terms_.emplace(m, coefficient);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

bool Polynomial::is_variable() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 &&
         terms_.begin()->first.factors().size() == 1 &&
         terms_.begin()->first.factors().front().second == 1;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw PreconditionViolated("leading term of the zero polynomial");
  return terms_.begin()->first;
}

const mpz_class& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw PreconditionViolated("leading term of the zero polynomial");
  return terms_.begin()->second;
}

mpz_class Polynomial::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class Polynomial::integer_content() const {
  mpz_class g = 0;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

int Polynomial::degree_in(const VarId& v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

std::set<VarId> Polynomial::variables() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.insert(f.first);
  }
  return out;
}

std::vector<Polynomial> Polynomial::coefficients_in(const VarId& v) const {
  std::vector<Polynomial> out(static_cast<std::size_t>(std::max(degree_in(v), 0) + 1));
  for (const auto& [m, c] : terms_) {
    out[static_cast<std::size_t>(m.exponent(v))].terms_.emplace(m.without(v), c);
  }
  return out;
}

Polynomial Polynomial::from_coefficients(const VarId& v, const std::vector<Polynomial>& coeffs) {
  Polynomial out;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    const Monomial shift(v, static_cast<int>(d));
    for (const auto& [m, c] : coeffs[d].terms_) out.add_term(m * shift, c);
  }
  return out;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  out += rhs;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  out -= rhs;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  Polynomial out;
  if (is_zero() || rhs.is_zero()) return out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1L);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::scaled(const mpz_class& factor) const {
  Polynomial out;
  if (factor == 0) return out;
  out.terms_ = terms_;
  for (auto& [m, c] : out.terms_) c *= factor;
  return out;
}

Polynomial Polynomial::divided_by_integer(const mpz_class& d) const {
  if (d == 0) throw DivisionByZero("polynomial divided by integer zero");
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
      throw PreconditionViolated("inexact integer division of polynomial");
    }
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return out;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial out;
  // Multiplying by a monomial preserves the term order, so hint at the end.
  for (const auto& [mm, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, c);
  return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (divisor.is_one()) return *this;
  Polynomial quotient;
  Polynomial remainder = *this;
  const Monomial& lm = divisor.leading_monomial();
  const mpz_class& lc = divisor.leading_coefficient();
  if (divisor.is_monomial()) {
    for (const auto& [m, c] : terms_) {
      auto q = m.divide(lm);
      if (!q || !mpz_divisible_p(c.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
      mpz_class qc;
      mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), lc.get_mpz_t());
      quotient.terms_.emplace_hint(quotient.terms_.end(), *q, qc);
    }
    return quotient;
  }
  while (!remainder.is_zero()) {
    const Monomial& rm = remainder.leading_monomial();
    const mpz_class& rc = remainder.leading_coefficient();
    auto q = rm.divide(lm);
    if (!q || !mpz_divisible_p(rc.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), lc.get_mpz_t());
    quotient.add_term(*q, qc);
    const Monomial qm = *q;
    for (const auto& [m, c] : divisor.terms_) remainder.add_term(m * qm, -(c * qc));
  }
  return quotient;
}

Polynomial Polynomial::rename(const std::map<VarId, VarId>& renaming) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    std::vector<std::pair<VarId, int>> factors;
    factors.reserve(m.factors().size());
    for (const auto& [v, e] : m.factors()) {
      auto it = renaming.find(v);
      factors.emplace_back(it == renaming.end() ? v : it->second, e);
    }
    out.add_term(Monomial(std::move(factors)), c);
  }
  return out;
}

Rational Polynomial::evaluate(const Point& point) const {
  std::vector<VarId> missing;
  for (const VarId& v : variables()) {
    if (!point.count(v)) missing.push_back(v);
  }
  if (!missing.empty()) {
    std::string names;
    for (const auto& v : missing) names += (names.empty() ? "" : ", ") + v.to_string();
    throw UnboundVariable("unbound variables: " + names);
  }
  mpq_class total = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class term = c;
    for (const auto& [v, e] : m.factors()) {
      const mpq_class& value = point.at(v).raw();
      for (int k = 0; k < e; ++k) term *= value;
    }
    total += term;
  }
  return Rational(total);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const mpz_class magnitude = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_one()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + '*';
      out += m.to_string();
    }
    first = false;
  }
  return out;
}

}  // namespace rowmotion
