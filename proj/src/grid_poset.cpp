#include "rowmotion/grid_poset.hpp"

#include <algorithm>

#include "rowmotion/errors.hpp"

namespace rowmotion {

std::string GridPoint::to_string() const { return std::to_string(i) + "," + std::to_string(j); }

GridPoint parse_grid_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("expected 'i,j', got '" + text + "'");
  try {
    std::size_t used_i = 0;
    std::size_t used_j = 0;
    const std::string a = text.substr(0, comma);
    const std::string b = text.substr(comma + 1);
    const int i = std::stoi(a, &used_i);
    const int j = std::stoi(b, &used_j);
    if (used_i != a.size() || used_j != b.size()) throw ParseError("expected 'i,j', got '" + text + "'");
    return {i, j};
  } catch (const std::logic_error&) {
    throw ParseError("expected 'i,j', got '" + text + "'");
  }
}

RectPoset::RectPoset(int r, int s) : RectPoset(r, s, 0, 0) {}

RectPoset::RectPoset(int r, int s, int imin, int jmin) : r_(r), s_(s), imin_(imin), jmin_(jmin) {
  if (r < 0 || s < 0) throw OutOfRange("rectangle sides must be nonnegative");
}

RectPoset RectPoset::extended(int r, int s) { return RectPoset(r, s, -r - s, -r - s); }

bool RectPoset::contains(const GridPoint& v) const {
  return v.i >= imin_ && v.i <= r_ && v.j >= jmin_ && v.j <= s_;
}

std::size_t RectPoset::size() const {
  return static_cast<std::size_t>(r_ - imin_ + 1) * static_cast<std::size_t>(s_ - jmin_ + 1);
}

std::vector<GridPoint> RectPoset::elements() const {
  std::vector<GridPoint> out;
  out.reserve(size());
  for (int i = imin_; i <= r_; ++i) {
    for (int j = jmin_; j <= s_; ++j) out.push_back({i, j});
  }
  return out;
}

void RectPoset::require(const GridPoint& v) const {
  if (!contains(v)) {
    throw OutOfRange("point (" + v.to_string() + ") outside [" + std::to_string(imin_) + "," +
                     std::to_string(r_) + "]x[" + std::to_string(jmin_) + "," + std::to_string(s_) + "]");
  }
}

CoverSet covers(const RectPoset& p, const GridPoint& v) {
  p.require(v);
  CoverSet out;
  if (v.i < p.r()) out.points.push_back({v.i + 1, v.j});
  if (v.j < p.s()) out.points.push_back({v.i, v.j + 1});
  out.adjoined = v.i == p.r() && v.j == p.s();
  return out;
}

CoverSet covered_by(const RectPoset& p, const GridPoint& v) {
  p.require(v);
  CoverSet out;
  if (v.i > p.imin()) out.points.push_back({v.i - 1, v.j});
  if (v.j > p.jmin()) out.points.push_back({v.i, v.j - 1});
  out.adjoined = v.i == p.imin() && v.j == p.jmin();
  return out;
}

std::vector<GridPoint> linear_extension_desc(const RectPoset& p) {
  std::vector<GridPoint> out = p.elements();
  std::sort(out.begin(), out.end(), [](const GridPoint& a, const GridPoint& b) {
    if (a.rank() != b.rank()) return a.rank() > b.rank();
    return a.i > b.i;
  });
  return out;
}

File file_by_offset(const RectPoset& p, int t) {
  if (t < -p.r() || t > p.s()) {
    throw OutOfRange("file offset " + std::to_string(t) + " outside [" + std::to_string(-p.r()) + "," +
                     std::to_string(p.s()) + "]");
  }
  File f;
  f.offset = t;
  for (int i = p.r(); i >= 0; --i) {
    const int j = i + t;
    if (j >= 0 && j <= p.s()) f.points.push_back({i, j});
  }
  // Classify in the frame with s <= r; transposing swaps coordinates.
  GridPoint top = f.points.front();
  int r = p.r();
  int s = p.s();
  if (r < s) {
    std::swap(r, s);
    std::swap(top.i, top.j);
    f.transposed = true;
  }
  if (top.i == r && top.j < s) {
    f.kind = FileCase::A;
    f.d = top.j;
  } else {
    f.d = top.i;
    f.kind = top.i < s ? FileCase::B : FileCase::C;
  }
  return f;
}

int hexagon_bound(const RectPoset& p, int m, int n) { return std::min(p.r() - m, p.s() - n) + 1; }

Region hexagon(const RectPoset& p, int m, int n, int k) {
  p.require({m, n});
  const int bound = hexagon_bound(p, m, n);
  if (k < 0 || k > bound) {
    throw HypothesisViolated("order " + std::to_string(k) + " at base (" + std::to_string(m) + "," +
                             std::to_string(n) + ") exceeds bound " + std::to_string(bound));
  }
  Region out;
  out.ambient = p;
  out.base = {m, n};
  out.k = k;
  const int low = m + n + k - 1;
  const int high = p.r() + p.s() - k + 1;
  for (int u = m; u <= p.r(); ++u) {
    for (int v = n; v <= p.s(); ++v) {
      if (u + v >= low && u + v <= high) {
        out.members.push_back({u, v});
        out.member_set.insert({u, v});
      }
    }
  }
  for (int l = 1; l <= k; ++l) {
    out.sources.push_back({m + k - l, n + l - 1});
    out.sinks.push_back({p.r() - l + 1, p.s() - k + l});
  }
  return out;
}

}  // namespace rowmotion
