#include "rowmotion/bounce.hpp"

#include <map>
#include <optional>

#include "rowmotion/avar.hpp"
#include "rowmotion/closed_form.hpp"
#include "rowmotion/errors.hpp"

namespace rowmotion {
namespace {

std::string region_tag(const Region& region) {
  return region.base.to_string() + "/" + std::to_string(region.k);
}

std::string family_string(const NilpFamily& f) {
  std::string out;
  for (const auto& path : f.paths) {
    if (!out.empty()) out += ' ';
    out += path.source().to_string() + ":" + path.steps();
  }
  return out;
}

void validate_family(const Region& region, const NilpFamily& family, const char* color) {
  const std::string where = std::string(color) + " family at " + region_tag(region);
  if (family.paths.size() != static_cast<std::size_t>(region.k)) {
    throw MalformedOverlay(where + " has " + std::to_string(family.paths.size()) + " paths");
  }
  std::set<GridPoint> seen;
  for (std::size_t l = 0; l < family.paths.size(); ++l) {
    const LatticePath& path = family.paths[l];
    if (path.source() != region.sources[l] || path.sink() != region.sinks[l]) {
      throw MalformedOverlay(where + ": path " + std::to_string(l + 1) + " has wrong endpoints");
    }
    for (const auto& v : path.vertices()) {
      if (!region.contains(v)) throw MalformedOverlay(where + ": vertex " + v.to_string() + " outside region");
      if (!seen.insert(v).second) throw MalformedOverlay(where + ": paths meet at " + v.to_string());
    }
  }
}

void add_edges(std::multiset<ColoredEdge>& out, const NilpFamily& family, Color color) {
  for (const auto& path : family.paths) {
    const auto& vs = path.vertices();
    for (std::size_t t = 0; t + 1 < vs.size(); ++t) out.insert({{vs[t], vs[t + 1]}, color});
  }
}

Color other(Color c) { return c == Color::Blue ? Color::Red : Color::Blue; }

// Follows the edges of `color` out of each source of the region.
NilpFamily trace_family(const std::multiset<ColoredEdge>& edges, Color color, const Region& region) {
  std::map<GridPoint, std::vector<GridPoint>> out;
  std::size_t total = 0;
  for (const auto& ce : edges) {
    if (ce.color != color) continue;
    out[ce.edge.lo].push_back(ce.edge.hi);
    ++total;
  }
  const char* name = color == Color::Blue ? "blue" : "red";
  NilpFamily family;
  std::size_t used = 0;
  for (const auto& source : region.sources) {
    std::vector<GridPoint> vertices{source};
    for (auto it = out.find(source); it != out.end(); it = out.find(vertices.back())) {
      if (it->second.size() != 1) {
        throw MalformedOverlay(std::string(name) + " edges branch at " + it->first.to_string());
      }
      vertices.push_back(it->second.front());
      ++used;
    }
    family.paths.emplace_back(std::move(vertices));
  }
  if (used != total) throw MalformedOverlay(std::string(name) + " edges not reachable from the sources");
  return family;
}

// Ascends edges of `up` and descends edges of `down`.  At each vertex the
// incident edge ends are paired: an arrival turns around when it can, and
// continues straight only if the straight edge is not claimed by a turn.
// The pairing makes the two bounce paths independent of traversal order.
BouncePath traverse(const std::multiset<ColoredEdge>& edges, const GridPoint& start, Color up, Color down) {
  std::map<GridPoint, GridPoint> up_out, up_in, down_out, down_in;
  for (const auto& ce : edges) {
    if (ce.color != up && ce.color != down) continue;
    auto& out = ce.color == up ? up_out : down_out;
    auto& in = ce.color == up ? up_in : down_in;
    if (!out.emplace(ce.edge.lo, ce.edge.hi).second || !in.emplace(ce.edge.hi, ce.edge.lo).second) {
      throw MalformedOverlay("edges of one color branch at " + ce.edge.lo.to_string());
    }
  }
  BouncePath path{start, {}};
  GridPoint v = start;
  bool rising = true;
  const std::size_t limit = edges.size();
  while (path.steps.size() <= limit) {
    const bool has_up = up_out.count(v) != 0;
    const bool has_down = down_in.count(v) != 0;
    if (rising ? has_down : !has_up) {
      if (!has_down || (!rising && up_in.count(v))) break;
      const GridPoint w = down_in.at(v);
      path.steps.push_back({{w, v}, down, false});
      v = w;
      rising = false;
    } else {
      if (!has_up || (rising && down_out.count(v))) break;
      const GridPoint w = up_out.at(v);
      path.steps.push_back({{v, w}, up, true});
      v = w;
      rising = true;
    }
  }
  if (path.steps.size() > limit) throw MalformedOverlay("bounce path does not terminate");
  return path;
}

void flip(std::multiset<ColoredEdge>& edges, const std::vector<ColoredEdge>& chosen) {
  for (const auto& ce : chosen) {
    auto it = edges.find(ce);
    if (it == edges.end()) throw MalformedOverlay("missing edge during recoloring");
    edges.erase(it);
  }
  for (const auto& ce : chosen) edges.insert({ce.edge, other(ce.color)});
}

std::vector<ColoredEdge> path_edges(const BouncePath& path) {
  std::vector<ColoredEdge> out;
  for (const auto& step : path.steps) out.push_back({step.edge, step.color});
  return out;
}

Region region_or_malformed(const RectPoset& p, int m, int n, int k) {
  try {
    return hexagon(p, m, n, k);
  } catch (const Error& e) {
    throw MalformedOverlay(std::string("no region for the image: ") + e.what());
  }
}

std::string route(const GridPoint& from, const GridPoint& to, bool leftmost) {
  const std::string r(static_cast<std::size_t>(to.i - from.i), 'R');
  const std::string u(static_cast<std::size_t>(to.j - from.j), 'U');
  return leftmost ? r + u : u + r;
}

// One of the six families sets in the relation: order `ord` at
// (i-k+ei, j-k+ej), hugging ([k-j-ej]_+, [k-i-ei]_+).
struct HuggingSet {
  std::optional<Region> region;
  int c = 0;
  int d = 0;
  std::vector<NilpFamily> families;
};

HuggingSet hugging_set(const RectPoset& grid, int i, int j, int k, int ei, int ej, int ord, bool hug) {
  HuggingSet out;
  if (hug) {
    out.c = positive_part(k - j - ej);
    out.d = positive_part(k - i - ei);
  }
  try {
    out.region = hexagon(grid, i - k + ei, j - k + ej, ord);
  } catch (const HypothesisViolated&) {
    return out;
  } catch (const OutOfRange&) {
    return out;
  }
  out.families = hugging_families(*out.region, out.c, out.d);
  return out;
}

// mu^{(c,d)} phi_{ord-c-d}(i-k+ei+c+d, j-k+ej+c+d) on p; zero when that
// phi has no region.
Polynomial shifted_phi(const RectPoset& p, int i, int j, int k, int ei, int ej, int ord, bool hug) {
  const int c = hug ? positive_part(k - j - ej) : 0;
  const int d = hug ? positive_part(k - i - ei) : 0;
  const int m = c + d;
  if (ord - m < 0) return Polynomial();
  const GridPoint base{i - k + ei + m, j - k + ej + m};
  if (base.i > p.r() || base.j > p.s()) {
    // Empty order filter: only the empty family, of weight 1.
    return ord == m ? Polynomial(1L) : Polynomial();
  }
  try {
    return shift_mu(phi(p, base.i, base.j, ord - m).value, c, d);
  } catch (const HypothesisViolated&) {
    return Polynomial();
  }
}

Polynomial weight_sum(const HuggingSet& set, const RectPoset& p) {
  Polynomial total;
  for (const auto& f : set.families) {
    std::vector<std::pair<VarId, int>> factors;
    const std::set<GridPoint> covered = f.covered();
    for (const auto& v : set.region->members) {
      if (!covered.count(v) && p.contains(v)) factors.emplace_back(avar(v.i, v.j), 1);
    }
    total += Polynomial(Monomial(std::move(factors)), 1);
  }
  return total;
}

std::string pair_key(const NilpFamily& blue, const NilpFamily& red) {
  return family_string(blue) + " | " + family_string(red);
}

Report run_plucker(const RectPoset& p, int i, int j, int k, bool general) {
  Report report;
  report.name = general ? "plucker-general" : "plucker";
  const std::string at = "(i,j,k)=(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
  report.note(at + " on [0," + std::to_string(p.r()) + "]x[0," + std::to_string(p.s()) + "]");

  // Symbolic identity with phi computed in p.
  const Polynomial lhs = shifted_phi(p, i, j, k, 0, 0, k, general) * shifted_phi(p, i, j, k, 1, 1, k - 1, general);
  const Polynomial rhs_left = shifted_phi(p, i, j, k, 1, 0, k, general) * shifted_phi(p, i, j, k, 0, 1, k - 1, general);
  const Polynomial rhs_right = shifted_phi(p, i, j, k, 0, 1, k, general) * shifted_phi(p, i, j, k, 1, 0, k - 1, general);
  if (lhs != rhs_left + rhs_right) report.fail("symbolic: " + lhs.to_string() + " != " + (rhs_left + rhs_right).to_string());

  // Bijective check on the grid carrying the families.
  const RectPoset grid = general ? RectPoset::extended(p.r(), p.s()) : p;
  const HuggingSet lb = hugging_set(grid, i, j, k, 0, 0, k, general);
  const HuggingSet lr = hugging_set(grid, i, j, k, 1, 1, k - 1, general);
  const HuggingSet b_left = hugging_set(grid, i, j, k, 1, 0, k, general);
  const HuggingSet r_left = hugging_set(grid, i, j, k, 0, 1, k - 1, general);
  const HuggingSet b_right = hugging_set(grid, i, j, k, 0, 1, k, general);
  const HuggingSet r_right = hugging_set(grid, i, j, k, 1, 0, k - 1, general);

  // Each set's generating function, restricted to p, is its shifted phi.
  const struct {
    const HuggingSet* set;
    int ei, ej, ord;
  } sets[] = {{&lb, 0, 0, k}, {&lr, 1, 1, k - 1}, {&b_left, 1, 0, k}, {&r_left, 0, 1, k - 1}, {&b_right, 0, 1, k},
              {&r_right, 1, 0, k - 1}};
  for (const auto& s : sets) {
    if (!s.set->region) continue;
    const Polynomial gf = weight_sum(*s.set, p);
    const Polynomial expected = shifted_phi(p, i, j, k, s.ei, s.ej, s.ord, general);
    if (gf != expected) {
      report.fail("generating function at " + region_tag(*s.set->region) + ": " + gf.to_string() +
                  " != " + expected.to_string());
    }
  }

  std::set<std::string> left_targets;
  std::set<std::string> right_targets;
  for (const auto& b : b_left.families) {
    for (const auto& r : r_left.families) left_targets.insert(pair_key(b, r));
  }
  for (const auto& b : b_right.families) {
    for (const auto& r : r_right.families) right_targets.insert(pair_key(b, r));
  }
  const std::size_t lhs_count = lb.families.size() * lr.families.size();
  report.note("lhs " + std::to_string(lhs_count) + ", left " + std::to_string(left_targets.size()) + ", right " +
              std::to_string(right_targets.size()));
  if (lhs_count != left_targets.size() + right_targets.size()) report.fail("cardinality mismatch");

  std::set<std::string> images;
  if (lb.region && lr.region) {
    for (const auto& b : lb.families) {
      for (const auto& r : lr.families) {
        ++report.trials;
        const ColoredOverlay o{*lb.region, *lr.region, b, r};
        try {
          const auto [side, image] = swap(o);
          const std::string key = pair_key(image.blue, image.red);
          const auto& targets = side == Side::Left ? left_targets : right_targets;
          if (!targets.count(key)) report.fail("image outside the " + to_string(side) + " set: " + o.to_string());
          if (!images.insert(key).second) report.fail("two overlays share the image of " + o.to_string());
          if (overlay_weight(o, p) != overlay_weight(image, p)) report.fail("weight changed: " + o.to_string());
          if (!(unswap(side, image) == o)) report.fail("unswap does not invert swap: " + o.to_string());
        } catch (const MalformedOverlay& e) {
          report.fail(std::string(e.what()) + ": " + o.to_string());
        }
      }
    }
  }
  // swap o unswap on the image side, which also gives surjectivity.
  const struct {
    Side side;
    const HuggingSet* blue;
    const HuggingSet* red;
  } images_sides[] = {{Side::Left, &b_left, &r_left}, {Side::Right, &b_right, &r_right}};
  for (const auto& s : images_sides) {
    if (!s.blue->region || !s.red->region) continue;
    for (const auto& b : s.blue->families) {
      for (const auto& r : s.red->families) {
        const ColoredOverlay image{*s.blue->region, *s.red->region, b, r};
        try {
          const ColoredOverlay pre = unswap(s.side, image);
          const auto [side, back] = swap(pre);
          if (side != s.side || !(back == image)) report.fail("swap does not invert unswap: " + image.to_string());
        } catch (const MalformedOverlay& e) {
          report.fail(std::string(e.what()) + ": " + image.to_string());
        }
      }
    }
  }
  return report;
}

}  // namespace

std::string to_string(Side side) { return side == Side::Left ? "left" : "right"; }

std::multiset<ColoredEdge> ColoredOverlay::edges() const {
  std::multiset<ColoredEdge> out;
  add_edges(out, blue, Color::Blue);
  add_edges(out, red, Color::Red);
  return out;
}

std::string ColoredOverlay::to_string() const {
  return "blue@" + region_tag(blue_region) + ": " + family_string(blue) + "; red@" + region_tag(red_region) + ": " +
         family_string(red);
}

ColoredOverlay make_overlay(Region blue_region, Region red_region, NilpFamily blue, NilpFamily red) {
  validate_family(blue_region, blue, "blue");
  validate_family(red_region, red, "red");
  return {std::move(blue_region), std::move(red_region), std::move(blue), std::move(red)};
}

ColoredOverlay make_overlay(const RectPoset& p, int i, int j, int k, NilpFamily blue, NilpFamily red) {
  if (k < 1) throw MalformedOverlay("overlay order must be at least 1");
  return make_overlay(region_or_malformed(p, i - k, j - k, k), region_or_malformed(p, i - k + 1, j - k + 1, k - 1),
                      std::move(blue), std::move(red));
}

GridPoint BouncePath::end() const { return steps.empty() ? start : steps.back().upward ? steps.back().edge.hi : steps.back().edge.lo; }

std::string BouncePath::compass() const {
  std::string out;
  for (const auto& step : steps) {
    const bool plus_j = step.edge.hi.j != step.edge.lo.j;
    const char* name = step.upward ? (plus_j ? "NE" : "NW") : (plus_j ? "SW" : "SE");
    if (!out.empty()) out += ',';
    out += name;
  }
  return out;
}

BounceDecomposition decompose(const ColoredOverlay& o) {
  const int k = o.blue_region.k;
  if (k < 1 || o.red_region.k != k - 1 || o.red_region.base != o.blue_region.base + GridPoint{1, 1}) {
    throw MalformedOverlay("families are not offset by one rank: " + o.to_string());
  }
  const auto edges = o.edges();
  const std::set<GridPoint> top(o.blue_region.sinks.begin(), o.blue_region.sinks.end());
  const std::set<GridPoint> bottom(o.red_region.sources.begin(), o.red_region.sources.end());
  auto classify = [&](const BouncePath& path) {
    const GridPoint end = path.end();
    if (top.count(end)) return true;
    if (bottom.count(end)) return false;
    throw MalformedOverlay("bounce path from " + path.start.to_string() + " stops at " + end.to_string());
  };

  BounceDecomposition out;
  const BouncePath left = traverse(edges, o.blue_region.sources.front(), Color::Blue, Color::Red);
  if (k == 1) {
    if (!classify(left)) throw MalformedOverlay("single bounce path does not reach the top");
    out.vertical = left;
    out.horizontal.start = left.start;
    const GridPoint first = left.steps.front().edge.hi;
    out.side = first.i > left.start.i ? Side::Left : Side::Right;
    return out;
  }
  const BouncePath right = traverse(edges, o.blue_region.sources.back(), Color::Blue, Color::Red);
  const bool left_top = classify(left);
  const bool right_top = classify(right);
  if (left_top == right_top) throw MalformedOverlay("both bounce paths end on the same side: " + o.to_string());
  out.vertical = left_top ? left : right;
  out.horizontal = left_top ? right : left;
  out.side = left_top ? Side::Left : Side::Right;
  for (int l = 1; l + 1 < k; ++l) {
    const auto& vs = o.blue.paths[static_cast<std::size_t>(l)].vertices();
    out.twigs.push_back({vs[0], vs[1]});
  }
  return out;
}

std::pair<Side, ColoredOverlay> swap(const ColoredOverlay& o) {
  const BounceDecomposition d = decompose(o);
  auto edges = o.edges();
  std::vector<ColoredEdge> chosen = path_edges(d.horizontal);
  for (const auto& twig : d.twigs) chosen.push_back({twig, Color::Blue});
  flip(edges, chosen);
  auto first = edges.find({d.vertical.steps.front().edge, Color::Blue});
  if (first == edges.end()) throw MalformedOverlay("vertical path lost its first edge");
  edges.erase(first);

  const RectPoset& ambient = o.blue_region.ambient;
  const GridPoint base = o.blue_region.base;
  const int k = o.blue_region.k;
  const GridPoint blue_shift = d.side == Side::Left ? GridPoint{1, 0} : GridPoint{0, 1};
  const GridPoint red_shift = d.side == Side::Left ? GridPoint{0, 1} : GridPoint{1, 0};
  Region blue_region = region_or_malformed(ambient, base.i + blue_shift.i, base.j + blue_shift.j, k);
  Region red_region = region_or_malformed(ambient, base.i + red_shift.i, base.j + red_shift.j, k - 1);
  NilpFamily blue = trace_family(edges, Color::Blue, blue_region);
  NilpFamily red = trace_family(edges, Color::Red, red_region);
  return {d.side, make_overlay(std::move(blue_region), std::move(red_region), std::move(blue), std::move(red))};
}

ColoredOverlay unswap(Side side, const ColoredOverlay& o) {
  const int k = o.blue_region.k;
  const GridPoint blue_shift = side == Side::Left ? GridPoint{1, 0} : GridPoint{0, 1};
  const GridPoint red_shift = side == Side::Left ? GridPoint{0, 1} : GridPoint{1, 0};
  const GridPoint base = o.blue_region.base - blue_shift;
  if (k < 1 || o.red_region.k != k - 1 || o.red_region.base != base + red_shift) {
    throw MalformedOverlay("overlay is not in the " + to_string(side) + " image shape: " + o.to_string());
  }
  const RectPoset& ambient = o.blue_region.ambient;
  Region blue_region = region_or_malformed(ambient, base.i, base.j, k);
  Region red_region = region_or_malformed(ambient, base.i + 1, base.j + 1, k - 1);

  auto edges = o.edges();
  std::vector<ColoredEdge> chosen;
  if (k >= 2) {
    // The horizontal path starts at the extreme red source opposite the
    // vertical one; colors play reversed roles.
    const GridPoint start = side == Side::Left ? o.red_region.sources.back() : o.red_region.sources.front();
    chosen = path_edges(traverse(edges, start, Color::Red, Color::Blue));
    const std::size_t skip = side == Side::Left ? k - 2 : 0;
    for (std::size_t l = 0; l < o.red.paths.size(); ++l) {
      if (l == skip) continue;
      const auto& vs = o.red.paths[l].vertices();
      chosen.push_back({{vs[0], vs[1]}, Color::Red});
    }
  }
  flip(edges, chosen);
  const std::size_t top = side == Side::Left ? 0 : static_cast<std::size_t>(k - 1);
  edges.insert({{blue_region.sources[top], o.blue_region.sources[top]}, Color::Blue});

  NilpFamily blue = trace_family(edges, Color::Blue, blue_region);
  NilpFamily red = trace_family(edges, Color::Red, red_region);
  return make_overlay(std::move(blue_region), std::move(red_region), std::move(blue), std::move(red));
}

Monomial overlay_weight(const ColoredOverlay& o, const RectPoset& weights_on) {
  std::vector<std::pair<VarId, int>> factors;
  const std::pair<const Region*, const NilpFamily*> parts[] = {{&o.blue_region, &o.blue}, {&o.red_region, &o.red}};
  for (const auto& [region, family] : parts) {
    const std::set<GridPoint> covered = family->covered();
    for (const auto& v : region->members) {
      if (!covered.count(v) && weights_on.contains(v)) factors.emplace_back(avar(v.i, v.j), 1);
    }
  }
  return Monomial(std::move(factors));
}

std::vector<NilpFamily> hugging_families(const Region& region, int c, int d) {
  const int k = region.k;
  if (c < 0 || d < 0 || c + d > k) return {};
  std::vector<std::optional<LatticePath>> forced(static_cast<std::size_t>(k));
  std::set<GridPoint> blocked;
  for (int l = 0; l < k; ++l) {
    const bool left = l < c;
    if (!left && l < k - d) continue;
    const auto idx = static_cast<std::size_t>(l);
    LatticePath path = LatticePath::from_steps(region.sources[idx], route(region.sources[idx], region.sinks[idx], left));
    for (const auto& v : path.vertices()) {
      if (!region.contains(v) || !blocked.insert(v).second) return {};
    }
    forced[idx] = std::move(path);
  }
  std::set<GridPoint> allowed;
  for (const auto& v : region.members) {
    if (!blocked.count(v)) allowed.insert(v);
  }
  const std::vector<GridPoint> sources(region.sources.begin() + c, region.sources.end() - d);
  const std::vector<GridPoint> sinks(region.sinks.begin() + c, region.sinks.end() - d);
  std::vector<NilpFamily> out;
  for (auto& middle : enum_families(allowed, sources, sinks)) {
    NilpFamily family;
    for (int l = 0; l < k; ++l) {
      const auto idx = static_cast<std::size_t>(l);
      family.paths.push_back(forced[idx] ? *forced[idx] : middle.paths[idx - static_cast<std::size_t>(c)]);
    }
    out.push_back(std::move(family));
  }
  return out;
}

Report plucker_check(const RectPoset& p, int i, int j, int k) {
  p.require({i, j});
  if (k >= 1 && k <= std::min(i, j)) return run_plucker(p, i, j, k, false);
  return plucker_check_general(p, i, j, k);
}

Report plucker_check_general(const RectPoset& p, int i, int j, int k) {
  p.require({i, j});
  const int m = positive_part(k - i) + positive_part(k - j);
  if (k < 1 || m > k || k > p.r() + p.s() + 1) {
    throw HypothesisViolated("Pluecker relation needs [k-i]_+ + [k-j]_+ <= k <= r+s+1 and k >= 1, got (i,j,k)=(" +
                             std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
  }
  return run_plucker(p, i, j, k, true);
}

}  // namespace rowmotion
