#pragma once

/**
 * @file dynamics.hpp
 * @brief Labelings of the rectangle and rowmotion at the birational,
 * piecewise-linear and combinatorial levels.
 *
 * Birational labelings give the adjoined bottom and top the value 1.  At
 * the piecewise-linear level they carry 0 and 1.  An order ideal I is seen
 * as the order-preserving 0/1 labeling that is 0 on I and 1 off I, so
 * combinatorial rowmotion is PL rowmotion restricted to such labelings.
 */

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "rowmotion/grid_poset.hpp"
#include "rowmotion/ratfn.hpp"
#include "rowmotion/rational.hpp"

namespace rowmotion {

template <class V>
class Labeling {
 public:
  /// values are row-major in the order of RectPoset::elements().
  Labeling(RectPoset poset, std::vector<V> values);

  const RectPoset& poset() const { return poset_; }
  const V& at(const GridPoint& v) const { return values_[index(v)]; }
  void set(const GridPoint& v, V value) { values_[index(v)] = std::move(value); }
  const std::vector<V>& values() const { return values_; }

 private:
  std::size_t index(const GridPoint& v) const;
  RectPoset poset_;
  std::vector<V> values_;
};

using SymbolicLabeling = Labeling<RatFn>;
using RationalLabeling = Labeling<Rational>;

/// The generic labeling v -> x[v].
SymbolicLabeling generic_labeling(const RectPoset& p);

/// Positive rational with numerator in [1, 2^16] and denominator in [1, 2^8].
Rational random_positive_rational(std::mt19937_64& rng);
RationalLabeling random_labeling(const RectPoset& p, std::mt19937_64& rng);

/// The x-point {x[v] = f(v)}.
Point labeling_point(const RationalLabeling& f);
RationalLabeling evaluate_labeling(const SymbolicLabeling& f, const Point& point);

/// Exact equality (cross-multiplication for RatFn).
bool labelings_equal(const RationalLabeling& a, const RationalLabeling& b);
bool labelings_equal(const SymbolicLabeling& a, const SymbolicLabeling& b);

/// Birational toggle at v.  Rational mode throws PoleEncountered when a
/// neighbour sum or the label itself vanishes.
template <class V>
Labeling<V> toggle_birational(const Labeling<V>& f, const GridPoint& v);

/// Toggles along linear_extension_desc, i.e. from the top down.
template <class V>
Labeling<V> rowmotion_birational(const Labeling<V>& f);

/// Toggles in the given order, which must list every element after all
/// elements above it (PreconditionViolated otherwise).
template <class V>
Labeling<V> rowmotion_birational(const Labeling<V>& f, const std::vector<GridPoint>& order);

template <class V>
Labeling<V> iterate_birational(const Labeling<V>& f, int k);

/// Throws OutOfRangeValue when some value lies outside [0, 1].
RationalLabeling toggle_pl(const RationalLabeling& f, const GridPoint& v);
RationalLabeling rowmotion_pl(const RationalLabeling& f);

class OrderIdeal {
 public:
  /// Throws PreconditionViolated unless members is downward closed in p.
  OrderIdeal(RectPoset poset, std::set<GridPoint> members);

  const RectPoset& poset() const { return poset_; }
  const std::set<GridPoint>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const GridPoint& v) const { return members_.count(v) != 0; }

  bool operator==(const OrderIdeal& rhs) const { return members_ == rhs.members_; }
  bool operator<(const OrderIdeal& rhs) const { return members_ < rhs.members_; }

 private:
  RectPoset poset_;
  std::set<GridPoint> members_;
};

/// 0 on the ideal, 1 on its complement.
RationalLabeling ideal_labeling(const OrderIdeal& ideal);
/// Inverse of ideal_labeling; PreconditionViolated on non-0/1 labelings.
OrderIdeal labeling_ideal(const RationalLabeling& f);

OrderIdeal rowmotion_combinatorial(const OrderIdeal& ideal);
/// I, rho(I), ..., up to (excluding) the first repetition of I.
std::vector<OrderIdeal> orbit(const OrderIdeal& ideal);

/// All order ideals, ordered by column heights.
std::vector<OrderIdeal> all_order_ideals(const RectPoset& p);
/// Orbits of combinatorial rowmotion, each starting at whichever of its
/// ideals comes first in all_order_ideals.
std::vector<std::vector<OrderIdeal>> orbit_decomposition(const RectPoset& p);

/// Smallest n >= 1 with rho^n f = f, or 0 if none up to max_iterations.
int observed_period(const RationalLabeling& f, int max_iterations);

}  // namespace rowmotion
