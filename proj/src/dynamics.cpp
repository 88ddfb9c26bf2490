#include "rowmotion/dynamics.hpp"

#include <map>

#include "rowmotion/errors.hpp"

namespace rowmotion {

template <class V>
Labeling<V>::Labeling(RectPoset poset, std::vector<V> values) : poset_(poset), values_(std::move(values)) {
  if (values_.size() != poset_.size()) {
    throw PreconditionViolated("labeling has " + std::to_string(values_.size()) + " values for " +
                               std::to_string(poset_.size()) + " elements");
  }
}

template <class V>
std::size_t Labeling<V>::index(const GridPoint& v) const {
  poset_.require(v);
  const auto width = static_cast<std::size_t>(poset_.s() - poset_.jmin() + 1);
  return static_cast<std::size_t>(v.i - poset_.imin()) * width + static_cast<std::size_t>(v.j - poset_.jmin());
}

template class Labeling<Rational>;
template class Labeling<RatFn>;

SymbolicLabeling generic_labeling(const RectPoset& p) {
  std::vector<RatFn> values;
  for (const auto& v : p.elements()) values.emplace_back(xvar(v.i, v.j));
  return SymbolicLabeling(p, std::move(values));
}

Rational random_positive_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 1L << 16);
  std::uniform_int_distribution<long> den(1, 1L << 8);
  const long n = num(rng);
  const long d = den(rng);
  return Rational(mpz_class(n), mpz_class(d));
}

RationalLabeling random_labeling(const RectPoset& p, std::mt19937_64& rng) {
  std::vector<Rational> values;
  values.reserve(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) values.push_back(random_positive_rational(rng));
  return RationalLabeling(p, std::move(values));
}

Point labeling_point(const RationalLabeling& f) {
  Point out;
  for (const auto& v : f.poset().elements()) out.emplace(xvar(v.i, v.j), f.at(v));
  return out;
}

RationalLabeling evaluate_labeling(const SymbolicLabeling& f, const Point& point) {
  std::vector<Rational> values;
  values.reserve(f.values().size());
  for (const auto& value : f.values()) values.push_back(value.evaluate(point));
  return RationalLabeling(f.poset(), std::move(values));
}

bool labelings_equal(const RationalLabeling& a, const RationalLabeling& b) {
  return a.poset() == b.poset() && a.values() == b.values();
}

bool labelings_equal(const SymbolicLabeling& a, const SymbolicLabeling& b) {
  if (!(a.poset() == b.poset())) return false;
  for (std::size_t k = 0; k < a.values().size(); ++k) {
    if (!ratfn_equal(a.values()[k], b.values()[k])) return false;
  }
  return true;
}

namespace {

template <class V>
V toggled_value(const Labeling<V>& f, const GridPoint& v) {
  const CoverSet below = covered_by(f.poset(), v);
  const CoverSet above = covers(f.poset(), v);
  V lower(below.adjoined ? 1L : 0L);
  for (const auto& w : below.points) lower += f.at(w);
  V upper(above.adjoined ? 1L : 0L);
  for (const auto& z : above.points) upper += inv(f.at(z));
  return lower / (f.at(v) * upper);
}

}  // namespace

template <class V>
Labeling<V> toggle_birational(const Labeling<V>& f, const GridPoint& v) {
  Labeling<V> out = f;
  try {
    out.set(v, toggled_value(f, v));
  } catch (const DivisionByZero& e) {
    throw PoleEncountered("toggle at (" + v.to_string() + "): " + e.what());
  }
  return out;
}

template <class V>
Labeling<V> rowmotion_birational(const Labeling<V>& f, const std::vector<GridPoint>& order) {
  const RectPoset& p = f.poset();
  std::map<GridPoint, std::size_t> position;
  for (std::size_t k = 0; k < order.size(); ++k) {
    p.require(order[k]);
    if (!position.emplace(order[k], k).second) {
      throw PreconditionViolated("toggle order repeats (" + order[k].to_string() + ")");
    }
  }
  if (position.size() != p.size()) throw PreconditionViolated("toggle order misses elements");
  for (const auto& [v, k] : position) {
    for (const auto& z : covers(p, v).points) {
      if (position.at(z) > k) {
        throw PreconditionViolated("toggle order visits (" + v.to_string() + ") before (" + z.to_string() + ")");
      }
    }
  }
  Labeling<V> out = f;
  for (const auto& v : order) {
    try {
      out.set(v, toggled_value(out, v));
    } catch (const DivisionByZero& e) {
      throw PoleEncountered("toggle at (" + v.to_string() + "): " + e.what());
    }
  }
  return out;
}

template <class V>
Labeling<V> rowmotion_birational(const Labeling<V>& f) {
  Labeling<V> out = f;
  for (const auto& v : linear_extension_desc(f.poset())) {
    try {
      out.set(v, toggled_value(out, v));
    } catch (const DivisionByZero& e) {
      throw PoleEncountered("toggle at (" + v.to_string() + "): " + e.what());
    }
  }
  return out;
}

template <class V>
Labeling<V> iterate_birational(const Labeling<V>& f, int k) {
  if (k < 0) throw PreconditionViolated("negative iteration count");
  Labeling<V> out = f;
  for (int n = 0; n < k; ++n) out = rowmotion_birational(out);
  return out;
}

template Labeling<Rational> toggle_birational(const Labeling<Rational>&, const GridPoint&);
template Labeling<RatFn> toggle_birational(const Labeling<RatFn>&, const GridPoint&);
template Labeling<Rational> rowmotion_birational(const Labeling<Rational>&);
template Labeling<RatFn> rowmotion_birational(const Labeling<RatFn>&);
template Labeling<Rational> rowmotion_birational(const Labeling<Rational>&, const std::vector<GridPoint>&);
template Labeling<RatFn> rowmotion_birational(const Labeling<RatFn>&, const std::vector<GridPoint>&);
template Labeling<Rational> iterate_birational(const Labeling<Rational>&, int);
template Labeling<RatFn> iterate_birational(const Labeling<RatFn>&, int);

namespace {

void require_unit_interval(const RationalLabeling& f) {
  for (const auto& v : f.poset().elements()) {
    const Rational& value = f.at(v);
    if (value < Rational(0L) || value > Rational(1L)) {
      throw OutOfRangeValue("value " + value.to_string() + " at (" + v.to_string() + ") outside [0,1]");
    }
  }
}

Rational pl_value(const RationalLabeling& f, const GridPoint& v) {
  const CoverSet above = covers(f.poset(), v);
  const CoverSet below = covered_by(f.poset(), v);
  Rational lowest_above(1L);
  if (!above.adjoined) {
    lowest_above = f.at(above.points.front());
    for (const auto& z : above.points) lowest_above = min(lowest_above, f.at(z));
  }
  Rational highest_below(0L);
  if (!below.adjoined) {
    highest_below = f.at(below.points.front());
    for (const auto& w : below.points) highest_below = max(highest_below, f.at(w));
  }
  return lowest_above + highest_below - f.at(v);
}

}  // namespace

RationalLabeling toggle_pl(const RationalLabeling& f, const GridPoint& v) {
  require_unit_interval(f);
  RationalLabeling out = f;
  out.set(v, pl_value(f, v));
  return out;
}

RationalLabeling rowmotion_pl(const RationalLabeling& f) {
  require_unit_interval(f);
  RationalLabeling out = f;
  for (const auto& v : linear_extension_desc(f.poset())) out.set(v, pl_value(out, v));
  return out;
}

OrderIdeal::OrderIdeal(RectPoset poset, std::set<GridPoint> members)
    : poset_(poset), members_(std::move(members)) {
  for (const auto& v : members_) {
    poset_.require(v);
    for (const auto& w : covered_by(poset_, v).points) {
      if (!members_.count(w)) {
        throw PreconditionViolated("not an order ideal: contains (" + v.to_string() + ") but not (" +
                                   w.to_string() + ")");
      }
    }
  }
}

RationalLabeling ideal_labeling(const OrderIdeal& ideal) {
  std::vector<Rational> values;
  for (const auto& v : ideal.poset().elements()) values.emplace_back(ideal.contains(v) ? 0L : 1L);
  return RationalLabeling(ideal.poset(), std::move(values));
}

OrderIdeal labeling_ideal(const RationalLabeling& f) {
  std::set<GridPoint> members;
  for (const auto& v : f.poset().elements()) {
    if (f.at(v).is_zero()) {
      members.insert(v);
    } else if (!f.at(v).is_one()) {
      throw PreconditionViolated("labeling value " + f.at(v).to_string() + " is not 0/1");
    }
  }
  return OrderIdeal(f.poset(), std::move(members));
}

OrderIdeal rowmotion_combinatorial(const OrderIdeal& ideal) {
  return labeling_ideal(rowmotion_pl(ideal_labeling(ideal)));
}

std::vector<OrderIdeal> orbit(const OrderIdeal& ideal) {
  std::vector<OrderIdeal> out{ideal};
  for (OrderIdeal next = rowmotion_combinatorial(ideal); !(next == ideal); next = rowmotion_combinatorial(next)) {
    out.push_back(next);
  }
  return out;
}

std::vector<OrderIdeal> all_order_ideals(const RectPoset& p) {
  // Ideals correspond to column heights h_0 >= h_1 >= ... >= h_r in [0, s+1].
  std::vector<OrderIdeal> out;
  std::vector<int> heights(static_cast<std::size_t>(p.r() + 1), 0);
  auto emit = [&]() {
    std::set<GridPoint> members;
    for (int i = 0; i <= p.r(); ++i) {
      for (int j = 0; j < heights[static_cast<std::size_t>(i)]; ++j) members.insert({i, j});
    }
    out.emplace_back(p, std::move(members));
  };
  auto fill = [&](auto&& self, int column, int ceiling) -> void {
    if (column > p.r()) {
      emit();
      return;
    }
    for (int h = 0; h <= ceiling; ++h) {
      heights[static_cast<std::size_t>(column)] = h;
      self(self, column + 1, h);
    }
  };
  fill(fill, 0, p.s() + 1);
  return out;
}

std::vector<std::vector<OrderIdeal>> orbit_decomposition(const RectPoset& p) {
  std::vector<std::vector<OrderIdeal>> out;
  std::set<OrderIdeal> seen;
  for (const auto& ideal : all_order_ideals(p)) {
    if (seen.count(ideal)) continue;
    auto cycle = orbit(ideal);
    for (const auto& member : cycle) seen.insert(member);
    out.push_back(std::move(cycle));
  }
  return out;
}

int observed_period(const RationalLabeling& f, int max_iterations) {
  RationalLabeling current = f;
  for (int n = 1; n <= max_iterations; ++n) {
    current = rowmotion_birational(current);
    if (labelings_equal(current, f)) return n;
  }
  return 0;
}

}  // namespace rowmotion
