#pragma once

/**
 * @file avar.hpp
 * @brief The A-coordinates A_ij = (x_{i,j-1} + x_{i-1,j}) / x_ij, where a
 * missing neighbour is dropped (A_00 = 1/x_00), and the index shift mu.
 */

#include <map>

#include "rowmotion/grid_poset.hpp"
#include "rowmotion/ratfn.hpp"

namespace rowmotion {

struct AChart {
  RectPoset poset{0, 0};
  std::map<GridPoint, RatFn> a_values;  // A_ij as a function of the x's

  /// A[i,j] -> a_values at (i,j), for use with substitute.
  Bindings bindings() const;
};

AChart x_to_A(const RectPoset& p);

/// A[u,v] -> A[u-a, v-b].  Throws ShiftOutOfRange naming the first variable
/// that would leave the nonnegative quadrant; x-variables are untouched.
RatFn shift_mu(const RatFn& f, int a, int b);
Polynomial shift_mu(const Polynomial& f, int a, int b);

/// Rewrites f in the x-variables of p.  Throws UnboundVariable when f uses
/// an A-variable outside p.
RatFn a_to_x(const RatFn& f, const RectPoset& p);

/// The A-values at a positive x-point, computed directly from the chart
/// formula.  Throws UnboundVariable or PoleEncountered.
Point a_point(const RectPoset& p, const Point& x_point);

}  // namespace rowmotion
