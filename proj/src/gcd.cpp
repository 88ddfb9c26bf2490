// Multivariate gcd over Z by recursion on the variable set: contents are
// taken with respect to a main variable and the primitive parts are reduced
// with a primitive pseudo-remainder sequence.

#include <algorithm>

#include "rowmotion/errors.hpp"
#include "rowmotion/polynomial.hpp"

namespace rowmotion {
namespace {

using Univariate = std::vector<Polynomial>;  // index = degree in the main variable

Polynomial normalized(Polynomial p) {
  if (!p.is_zero() && p.leading_coefficient() < 0) return -p;
  return p;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = a.divide_exact(b);
  if (!q) throw PreconditionViolated("gcd: inexact division " + a.to_string() + " / " + b.to_string());
  return *q;
}

// gcd of all monomials occurring in p.
Monomial monomial_content(const Polynomial& p) {
  auto it = p.terms().begin();
  Monomial g = it->first;
  for (++it; it != p.terms().end() && !g.is_one(); ++it) g = g.gcd(it->first);
  return g;
}

Polynomial content_of(const Univariate& coeffs) {
  Polynomial g;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

// Pseudo-remainder without the trailing power of lc(b); only its vanishing
// and its primitive part are used below.
Univariate lazy_prem(Univariate a, const Univariate& b) {
  const Polynomial& lcb = b.back();
  const std::size_t db = b.size() - 1;
  trim(a);
  while (!a.empty() && a.size() - 1 >= db) {
    const Polynomial lca = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c = c * lcb;
    for (std::size_t d = 0; d <= db; ++d) a[d + shift] -= lca * b[d];
    trim(a);
  }
  return a;
}

Univariate primitive(Univariate u) {
  const Polynomial c = content_of(u);
  if (!c.is_one()) {
    for (auto& x : u) {
      if (!x.is_zero()) x = exact_quotient(x, c);
    }
  }
  return u;
}

// gcd of two polynomials that are primitive with respect to v.
Polynomial primitive_gcd(const Polynomial& a, const Polynomial& b, const VarId& v) {
  Univariate ua = a.coefficients_in(v);
  Univariate ub = b.coefficients_in(v);
  if (ua.size() < ub.size()) std::swap(ua, ub);
  while (true) {
    if (ub.size() == 1) return Polynomial(1L);
    Univariate r = lazy_prem(ua, ub);
    if (r.empty()) return Polynomial::from_coefficients(v, ub);
    ua = std::move(ub);
    ub = primitive(std::move(r));
  }
}

Polynomial content_in(const Polynomial& p, const VarId& v) {
  return content_of(p.coefficients_in(v));
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_one() || b.is_one()) return Polynomial(1L);
  if (a == b) return normalized(a);
  if (a.is_constant() || b.is_constant()) {
    mpz_class g;
    const mpz_class ca = a.integer_content();
    const mpz_class cb = b.integer_content();
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return Polynomial(g);
  }

  // Split off monomial and integer contents; both are cheap and common.
  const Monomial ma = monomial_content(a);
  const Monomial mb = monomial_content(b);
  const Monomial mg = ma.gcd(mb);
  if (!ma.is_one() || !mb.is_one()) {
    const Polynomial ra = exact_quotient(a, Polynomial(ma, 1));
    const Polynomial rb = exact_quotient(b, Polynomial(mb, 1));
    return gcd(ra, rb).times_monomial(mg);
  }
  if (a.is_monomial() || b.is_monomial()) {
    // Monomial content is trivial here, so only integers can be shared.
    return gcd(Polynomial(a.integer_content()), Polynomial(b.integer_content()));
  }

  const std::set<VarId> va = a.variables();
  const std::set<VarId> vb = b.variables();
  for (const VarId& v : va) {
    if (!vb.count(v)) return gcd(content_in(a, v), b);
  }
  for (const VarId& v : vb) {
    if (!va.count(v)) return gcd(a, content_in(b, v));
  }

  VarId main = *va.begin();
  int best = std::min(a.degree_in(main), b.degree_in(main));
  for (const VarId& v : va) {
    const int d = std::min(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      main = v;
    }
  }

  const Polynomial ca = content_in(a, main);
  const Polynomial cb = content_in(b, main);
  const Polynomial pa = ca.is_one() ? a : exact_quotient(a, ca);
  const Polynomial pb = cb.is_one() ? b : exact_quotient(b, cb);
  const Polynomial c = gcd(ca, cb);
  Polynomial g = primitive_gcd(pa, pb, main);
  return normalized(c * g);
}

}  // namespace rowmotion
