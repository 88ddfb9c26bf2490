#pragma once

/**
 * @file nilp.hpp
 * @brief Lattice paths, vertex-disjoint path families in hexagon regions and
 * the polynomials phi_k(m, n), with two independent oracles.
 *
 * Steps are "R" = (1,0) and "U" = (0,1).  Paths and families are listed in
 * lexicographic order of their step strings with R < U.
 */

#include <set>
#include <string>
#include <vector>

#include "rowmotion/grid_poset.hpp"
#include "rowmotion/polynomial.hpp"
#include "rowmotion/ratfn.hpp"

namespace rowmotion {

class LatticePath {
 public:
  /// Throws PreconditionViolated on an empty list or a non-unit step.
  explicit LatticePath(std::vector<GridPoint> vertices);
  static LatticePath from_steps(const GridPoint& source, const std::string& steps);

  const std::vector<GridPoint>& vertices() const { return vertices_; }
  const GridPoint& source() const { return vertices_.front(); }
  const GridPoint& sink() const { return vertices_.back(); }
  std::string steps() const;

  bool operator==(const LatticePath& rhs) const = default;

 private:
  std::vector<GridPoint> vertices_;
};

struct NilpFamily {
  std::vector<LatticePath> paths;

  std::set<GridPoint> covered() const;
  bool operator==(const NilpFamily& rhs) const = default;
};

/// Paths from `from` to `to` using only vertices of `allowed`.
std::vector<LatticePath> enum_paths(const std::set<GridPoint>& allowed, const GridPoint& from,
                                    const GridPoint& to);
std::vector<LatticePath> enum_paths(const Region& region, const GridPoint& from, const GridPoint& to);

/// Vertex-disjoint families with path l from sources[l] to sinks[l] inside
/// `allowed`.  No sources yields the single empty family.
std::vector<NilpFamily> enum_families(const std::set<GridPoint>& allowed, const std::vector<GridPoint>& sources,
                                      const std::vector<GridPoint>& sinks);
std::vector<NilpFamily> enum_nilp(const Region& region);

/// Product of A over the members of `region` not covered by `family`.
Monomial uncovered_monomial(const Region& region, const NilpFamily& family);

struct PhiPolynomial {
  Region region;
  Polynomial value;
};

/// Sum over families of the uncovered A-monomials.  Throws
/// HypothesisViolated through hexagon when k is out of bounds.
PhiPolynomial phi(const Region& region);
PhiPolynomial phi(const RectPoset& p, int m, int n, int k);

/// det[G(s_a -> t_b)] with G the sum over single paths inside the region of
/// prod A^{-1} along the path, at `point`.  Requires k >= 1.
Rational lgv_ratio_oracle(const Region& region, const Point& point);

/// phi(region) / prod of A over the members, evaluated at `point`.
Rational phi_ratio(const PhiPolynomial& f, const Point& point);

/// Sum over paths (0,0) -> (r,s) of prod A^{-1}, rewritten in x.
RatFn telescoping_sum(const RectPoset& p);
/// telescoping_sum(p) == x[r,s].
bool telescoping_check(const RectPoset& p);

}  // namespace rowmotion
