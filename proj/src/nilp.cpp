#include "rowmotion/nilp.hpp"

#include <map>

#include "rowmotion/avar.hpp"
#include "rowmotion/errors.hpp"

namespace rowmotion {

LatticePath::LatticePath(std::vector<GridPoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw PreconditionViolated("lattice path without vertices");
  for (std::size_t k = 1; k < vertices_.size(); ++k) {
    const GridPoint d = vertices_[k] - vertices_[k - 1];
    if (!(d == GridPoint{1, 0} || d == GridPoint{0, 1})) {
      throw PreconditionViolated("lattice path step " + vertices_[k - 1].to_string() + " -> " +
                                 vertices_[k].to_string() + " is not (1,0) or (0,1)");
    }
  }
}

LatticePath LatticePath::from_steps(const GridPoint& source, const std::string& steps) {
  std::vector<GridPoint> vertices{source};
  for (char c : steps) {
    if (c == 'R') {
      vertices.push_back(vertices.back() + GridPoint{1, 0});
    } else if (c == 'U') {
      vertices.push_back(vertices.back() + GridPoint{0, 1});
    } else {
      throw ParseError(std::string("unknown step '") + c + "'");
    }
  }
  return LatticePath(std::move(vertices));
}

std::string LatticePath::steps() const {
  std::string out;
  for (std::size_t k = 1; k < vertices_.size(); ++k) out += vertices_[k].i > vertices_[k - 1].i ? 'R' : 'U';
  return out;
}

std::set<GridPoint> NilpFamily::covered() const {
  std::set<GridPoint> out;
  for (const auto& path : paths) out.insert(path.vertices().begin(), path.vertices().end());
  return out;
}

namespace {

// Depth-first search, R before U, avoiding `blocked`.  Calls emit for each
// completed vertex list.
template <class Emit>
void walk(const std::set<GridPoint>& allowed, const std::set<GridPoint>& blocked, const GridPoint& to,
          std::vector<GridPoint>& trail, Emit&& emit) {
  const GridPoint here = trail.back();
  if (here == to) {
    emit(trail);
    return;
  }
  for (const GridPoint step : {GridPoint{1, 0}, GridPoint{0, 1}}) {
    const GridPoint next = here + step;
    if (next.i > to.i || next.j > to.j) continue;
    if (!allowed.count(next) || blocked.count(next)) continue;
    trail.push_back(next);
    walk(allowed, blocked, to, trail, emit);
    trail.pop_back();
  }
}

}  // namespace

std::vector<LatticePath> enum_paths(const std::set<GridPoint>& allowed, const GridPoint& from,
                                    const GridPoint& to) {
  std::vector<LatticePath> out;
  if (!allowed.count(from) || !allowed.count(to) || from.i > to.i || from.j > to.j) return out;
  std::vector<GridPoint> trail{from};
  const std::set<GridPoint> blocked;
  walk(allowed, blocked, to, trail, [&](const std::vector<GridPoint>& t) { out.emplace_back(t); });
  return out;
}

std::vector<LatticePath> enum_paths(const Region& region, const GridPoint& from, const GridPoint& to) {
  return enum_paths(region.member_set, from, to);
}

std::vector<NilpFamily> enum_families(const std::set<GridPoint>& allowed, const std::vector<GridPoint>& sources,
                                      const std::vector<GridPoint>& sinks) {
  if (sources.size() != sinks.size()) throw PreconditionViolated("source and sink counts differ");
  std::vector<NilpFamily> out;
  std::set<GridPoint> blocked;
  NilpFamily current;
  auto place = [&](auto&& self, std::size_t l) -> void {
    if (l == sources.size()) {
      out.push_back(current);
      return;
    }
    const GridPoint& from = sources[l];
    if (!allowed.count(from) || blocked.count(from)) return;
    std::vector<GridPoint> trail{from};
    walk(allowed, blocked, sinks[l], trail, [&](const std::vector<GridPoint>& t) {
      current.paths.emplace_back(t);
      blocked.insert(t.begin(), t.end());
      self(self, l + 1);
      for (const auto& v : t) blocked.erase(v);
      current.paths.pop_back();
    });
  };
  place(place, 0);
  return out;
}

std::vector<NilpFamily> enum_nilp(const Region& region) {
  return enum_families(region.member_set, region.sources, region.sinks);
}

Monomial uncovered_monomial(const Region& region, const NilpFamily& family) {
  const std::set<GridPoint> covered = family.covered();
  std::vector<std::pair<VarId, int>> factors;
  for (const auto& v : region.members) {
    if (!covered.count(v)) factors.emplace_back(avar(v.i, v.j), 1);
  }
  return Monomial(std::move(factors));
}

PhiPolynomial phi(const Region& region) {
  Polynomial value;
  for (const auto& family : enum_nilp(region)) value += Polynomial(uncovered_monomial(region, family), 1);
  return {region, value};
}

PhiPolynomial phi(const RectPoset& p, int m, int n, int k) { return phi(hexagon(p, m, n, k)); }

namespace {

Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det(1L);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return Rational(0L);
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t row = c + 1; row < n; ++row) {
      if (a[row][c].is_zero()) continue;
      const Rational factor = a[row][c] / a[c][c];
      for (std::size_t col = c; col < n; ++col) a[row][col] -= factor * a[c][col];
    }
  }
  return det;
}

Rational a_value(const Point& point, const GridPoint& v) {
  auto it = point.find(avar(v.i, v.j));
  if (it == point.end()) throw UnboundVariable("unbound variable " + avar(v.i, v.j).to_string());
  if (it->second.is_zero()) throw PoleEncountered(avar(v.i, v.j).to_string() + " is zero");
  return it->second;
}

}  // namespace

Rational lgv_ratio_oracle(const Region& region, const Point& point) {
  const std::size_t k = region.sources.size();
  if (k == 0) throw PreconditionViolated("determinant oracle needs at least one path");
  std::vector<std::vector<Rational>> matrix(k, std::vector<Rational>(k, Rational(0L)));
  for (std::size_t a = 0; a < k; ++a) {
    // Path sums from s_a to every member, by dynamic programming in
    // row-major order (predecessors come first).
    std::map<GridPoint, Rational> reach;
    for (const auto& v : region.members) {
      Rational incoming(0L);
      if (v == region.sources[a]) {
        incoming = Rational(1L);
      } else {
        for (const GridPoint back : {v - GridPoint{1, 0}, v - GridPoint{0, 1}}) {
          auto it = reach.find(back);
          if (it != reach.end()) incoming += it->second;
        }
      }
      if (!incoming.is_zero()) reach.emplace(v, incoming / a_value(point, v));
    }
    for (std::size_t b = 0; b < k; ++b) {
      auto it = reach.find(region.sinks[b]);
      if (it != reach.end()) matrix[a][b] = it->second;
    }
  }
  return determinant(std::move(matrix));
}

Rational phi_ratio(const PhiPolynomial& f, const Point& point) {
  Rational total = f.value.evaluate(point);
  for (const auto& v : f.region.members) total /= a_value(point, v);
  return total;
}

RatFn telescoping_sum(const RectPoset& p) {
  const Region full = hexagon(p, 0, 0, 1);
  RatFn total;
  for (const auto& path : enum_paths(full, {0, 0}, {p.r(), p.s()})) {
    std::vector<std::pair<VarId, int>> factors;
    for (const auto& v : path.vertices()) factors.emplace_back(avar(v.i, v.j), 1);
    total = total + RatFn(Polynomial(1L), Polynomial(Monomial(std::move(factors)), 1));
  }
  return a_to_x(total, p);
}

bool telescoping_check(const RectPoset& p) {
  return ratfn_equal(telescoping_sum(p), RatFn(xvar(p.r(), p.s())));
}

}  // namespace rowmotion
