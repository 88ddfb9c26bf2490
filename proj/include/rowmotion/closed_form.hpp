#pragma once

/**
 * @file closed_form.hpp
 * @brief Lattice-path closed form for the iterates rho^{k+1}(i, j).
 *
 * With M = [k-i]_+ + [k-j]_+, case (a) (M <= k) is the shifted ratio
 * mu^([k-j]_+, [k-i]_+) phi_{k-M} / phi_{k-M+1} at base (i-k+M, j-k+M).
 * Case (b) (i + j <= k) is the reciprocal of rho^{k-i-j}(r-i, s-j).
 * rho_closed uses (a) whenever it applies and (b) only when M > k.
 */

#include "rowmotion/grid_poset.hpp"
#include "rowmotion/ratfn.hpp"

namespace rowmotion {

struct IterateQuery {
  RectPoset poset{0, 0};
  int i = 0;
  int j = 0;
  int k = 0;

  /// Throws OutOfRange unless (i, j) is in the poset and 0 <= k <= r+s+1.
  void validate() const;
};

enum class Frame { A, X };
enum class FormulaCase { A, B };

struct ClosedForm {
  RatFn value;
  Frame frame = Frame::A;
  FormulaCase which = FormulaCase::A;
};

int positive_part(int value);
int m_value(const IterateQuery& q);

/// Case (a).  Throws PreconditionViolated when M > k.
ClosedForm rho_case_a(const IterateQuery& q);
/// Case (b).  Throws PreconditionViolated when i + j > k.  At i + j = k the
/// inner iterate is the identity and the value is 1/x[r-i, s-j] (x-frame);
/// otherwise the inner case-(a) expression is inverted in the A-chart of
/// the same poset, so the result stays in the A-frame.
ClosedForm rho_case_b(const IterateQuery& q);
ClosedForm rho_closed(const IterateQuery& q);

/// The value as a function of the x-variables.
RatFn in_x_frame(const ClosedForm& form, const RectPoset& p);

/// phi_k(i-k, j-k) / phi_{k+1}(i-k, j-k).  Requires k <= min(i, j).
RatFn rho_noshift(const IterateQuery& q);

/// 1/x[r-i, s-j].  Requires i + j = k.
RatFn claim_mk(const IterateQuery& q);

}  // namespace rowmotion
