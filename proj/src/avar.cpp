#include "rowmotion/avar.hpp"

#include "rowmotion/errors.hpp"

namespace rowmotion {

Bindings AChart::bindings() const {
  Bindings out;
  for (const auto& [v, value] : a_values) out.emplace(avar(v.i, v.j), value);
  return out;
}

AChart x_to_A(const RectPoset& p) {
  AChart chart;
  chart.poset = p;
  for (const auto& v : p.elements()) {
    Polynomial below;
    if (v.j > 0) below += Polynomial(xvar(v.i, v.j - 1));
    if (v.i > 0) below += Polynomial(xvar(v.i - 1, v.j));
    if (below.is_zero()) below = Polynomial(1L);
    chart.a_values.emplace(v, RatFn(below, Polynomial(xvar(v.i, v.j))));
  }
  return chart;
}

namespace {

std::map<VarId, VarId> shift_renaming(const std::set<VarId>& variables, int a, int b) {
  std::map<VarId, VarId> renaming;
  for (const VarId& v : variables) {
    if (v.space != VarSpace::A) continue;
    if (v.i < a || v.j < b) {
      throw ShiftOutOfRange("shift (" + std::to_string(a) + "," + std::to_string(b) + ") moves " +
                            v.to_string() + " out of range");
    }
    renaming.emplace(v, avar(v.i - a, v.j - b));
  }
  return renaming;
}

}  // namespace

Polynomial shift_mu(const Polynomial& f, int a, int b) {
  if (a == 0 && b == 0) return f;
  return f.rename(shift_renaming(f.variables(), a, b));
}

RatFn shift_mu(const RatFn& f, int a, int b) {
  if (a == 0 && b == 0) return f;
  return RatFn(shift_mu(f.num(), a, b), shift_mu(f.den(), a, b));
}

RatFn a_to_x(const RatFn& f, const RectPoset& p) {
  Bindings bindings = x_to_A(p).bindings();
  std::set<VarId> variables = f.num().variables();
  for (const VarId& v : f.den().variables()) variables.insert(v);
  for (const VarId& v : variables) {
    if (v.space == VarSpace::X) bindings.emplace(v, RatFn(v));
  }
  return substitute(f, bindings);
}

Point a_point(const RectPoset& p, const Point& x_point) {
  Point out;
  auto x = [&](int i, int j) -> const Rational& {
    auto it = x_point.find(xvar(i, j));
    if (it == x_point.end()) throw UnboundVariable("unbound variable " + xvar(i, j).to_string());
    return it->second;
  };
  for (const auto& v : p.elements()) {
    Rational below(0L);
    if (v.j > 0) below += x(v.i, v.j - 1);
    if (v.i > 0) below += x(v.i - 1, v.j);
    if (v.i == 0 && v.j == 0) below = Rational(1L);
    const Rational& here = x(v.i, v.j);
    if (here.is_zero()) throw PoleEncountered("x" + v.to_string() + " is zero");
    out.emplace(avar(v.i, v.j), below / here);
  }
  return out;
}

}  // namespace rowmotion
