#include "rowmotion/closed_form.hpp"

#include <algorithm>

#include "rowmotion/avar.hpp"
#include "rowmotion/errors.hpp"
#include "rowmotion/nilp.hpp"

namespace rowmotion {

void IterateQuery::validate() const {
  poset.require({i, j});
  const int top = poset.r() + poset.s() + 1;
  if (k < 0 || k > top) {
    throw OutOfRange("iterate index k = " + std::to_string(k) + " outside [0," + std::to_string(top) + "]");
  }
}

int positive_part(int value) { return std::max(value, 0); }

int m_value(const IterateQuery& q) { return positive_part(q.k - q.i) + positive_part(q.k - q.j); }

namespace {

RatFn phi_ratio_expression(const RectPoset& p, int m, int n, int t) {
  const Polynomial num = phi(p, m, n, t).value;
  const Polynomial den = phi(p, m, n, t + 1).value;
  return RatFn(num, den);
}

}  // namespace

ClosedForm rho_case_a(const IterateQuery& q) {
  q.validate();
  const int M = m_value(q);
  if (M > q.k) throw PreconditionViolated("case (a) needs M <= k");
  const int t = q.k - M;
  const RatFn ratio = phi_ratio_expression(q.poset, q.i - q.k + M, q.j - q.k + M, t);
  return {shift_mu(ratio, positive_part(q.k - q.j), positive_part(q.k - q.i)), Frame::A, FormulaCase::A};
}

ClosedForm rho_case_b(const IterateQuery& q) {
  q.validate();
  if (q.i + q.j > q.k) throw PreconditionViolated("case (b) needs i + j <= k");
  const int I = q.poset.r() - q.i;
  const int J = q.poset.s() - q.j;
  const int K = q.k - q.i - q.j - 1;
  if (K < 0) return {inv(RatFn(xvar(I, J))), Frame::X, FormulaCase::B};
  const ClosedForm inner = rho_case_a({q.poset, I, J, K});
  return {inv(inner.value), Frame::A, FormulaCase::B};
}

ClosedForm rho_closed(const IterateQuery& q) {
  q.validate();
  return m_value(q) <= q.k ? rho_case_a(q) : rho_case_b(q);
}

RatFn in_x_frame(const ClosedForm& form, const RectPoset& p) {
  return form.frame == Frame::X ? form.value : a_to_x(form.value, p);
}

RatFn rho_noshift(const IterateQuery& q) {
  q.validate();
  if (q.k > std::min(q.i, q.j)) throw PreconditionViolated("no-shift formula needs k <= min(i, j)");
  return phi_ratio_expression(q.poset, q.i - q.k, q.j - q.k, q.k);
}

RatFn claim_mk(const IterateQuery& q) {
  q.validate();
  if (q.i + q.j != q.k) throw PreconditionViolated("M = k simplification needs i + j = k");
  return inv(RatFn(xvar(q.poset.r() - q.i, q.poset.s() - q.j)));
}

}  // namespace rowmotion
