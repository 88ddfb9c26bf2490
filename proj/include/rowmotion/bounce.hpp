#pragma once

/**
 * @file bounce.hpp
 * @brief The color-swapping bijection between pairs of path families.
 *
 * A blue family of order k based at (m, n) is overlaid with a red family of
 * order k - 1 based at (m + 1, n + 1).  Bounce paths start at the two
 * extreme blue sources, follow blue edges upward and red edges downward and
 * turn around whenever they can.  Swapping colors along the path that ends
 * at the bottom and along the twigs, then dropping the first edge of the
 * other path, gives a pair with bases skewed by one step.
 *
 * Compass names follow the Hasse diagram: NE = +(0,1), NW = +(1,0).
 */

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rowmotion/grid_poset.hpp"
#include "rowmotion/nilp.hpp"
#include "rowmotion/report.hpp"

namespace rowmotion {

enum class Color { Blue, Red };
enum class Side { Left, Right };

std::string to_string(Side side);

struct Edge {
  GridPoint lo;
  GridPoint hi;
  auto operator<=>(const Edge&) const = default;
};

struct ColoredEdge {
  Edge edge;
  Color color = Color::Blue;
  auto operator<=>(const ColoredEdge&) const = default;
};

struct ColoredOverlay {
  Region blue_region;
  Region red_region;
  NilpFamily blue;
  NilpFamily red;

  /// Every path edge with its color; a doubled edge appears twice.
  std::multiset<ColoredEdge> edges() const;
  /// "blue@m,n/k: i,j:STEPS ...; red@...", used for counterexamples.
  std::string to_string() const;
  bool operator==(const ColoredOverlay& rhs) const { return blue == rhs.blue && red == rhs.red; }
};

/// Validates both families against their regions.  Throws MalformedOverlay.
ColoredOverlay make_overlay(Region blue_region, Region red_region, NilpFamily blue, NilpFamily red);
/// The input shape: blue of order k at (i-k, j-k), red of order k-1 at
/// (i-k+1, j-k+1), both in p.
ColoredOverlay make_overlay(const RectPoset& p, int i, int j, int k, NilpFamily blue, NilpFamily red);

struct BounceStep {
  Edge edge;
  Color color = Color::Blue;
  bool upward = true;
};

struct BouncePath {
  GridPoint start;
  std::vector<BounceStep> steps;

  GridPoint end() const;
  /// Comma-separated compass directions, e.g. "NE,NW,SW".
  std::string compass() const;
};

struct BounceDecomposition {
  BouncePath vertical;
  BouncePath horizontal;  // empty when k = 1
  std::vector<Edge> twigs;
  /// Left when the vertical path starts at the leftmost blue source.
  Side side = Side::Left;
};

/// Throws MalformedOverlay when a traversal stops at an internal vertex or
/// both paths end on the same side.
BounceDecomposition decompose(const ColoredOverlay& o);

/// Blue bases of the image: Left -> (m+1, n), Right -> (m, n+1).
std::pair<Side, ColoredOverlay> swap(const ColoredOverlay& o);
ColoredOverlay unswap(Side side, const ColoredOverlay& o);

/// Product of A over uncovered region members of both families, keeping only
/// points of `weights_on` (the unextended rectangle).
Monomial overlay_weight(const ColoredOverlay& o, const RectPoset& weights_on);

/// Families in the region whose first c paths take the leftmost route and
/// whose last d paths take the rightmost route.  Empty when c + d exceeds
/// the order.
std::vector<NilpFamily> hugging_families(const Region& region, int c, int d);

/// Symbolic and bijective checks of the Pluecker-like relation at (i, j, k).
/// With 1 <= k <= min(i, j) the families live in p; otherwise the enlarged
/// grid with boundary-hugging families and mu-shifted phi's is used.
/// Throws HypothesisViolated when [k-i]_+ + [k-j]_+ <= k <= r+s+1 fails or
/// k < 1.
Report plucker_check(const RectPoset& p, int i, int j, int k);

/// Always uses the enlarged grid, also inside the plain range.
Report plucker_check_general(const RectPoset& p, int i, int j, int k);

}  // namespace rowmotion
