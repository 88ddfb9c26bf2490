#pragma once

/**
 * @file grid_poset.hpp
 * @brief The rectangle [0,r]x[0,s], its files and the hexagon regions that
 * carry the lattice-path families.
 *
 * The adjoined minimum and maximum are never materialized as points; cover
 * queries report them through a flag.  An extended rectangle with lower
 * corner (-r-s, -r-s) is available for the boundary-hugging construction.
 */

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace rowmotion {

struct GridPoint {
  int i = 0;
  int j = 0;

  auto operator<=>(const GridPoint&) const = default;
  int rank() const { return i + j; }
  GridPoint operator+(const GridPoint& d) const { return {i + d.i, j + d.j}; }
  GridPoint operator-(const GridPoint& d) const { return {i - d.i, j - d.j}; }
  /// "i,j", the JSON key form.
  std::string to_string() const;
};

/// Parses "i,j".  Throws ParseError.
GridPoint parse_grid_point(const std::string& text);

class RectPoset {
 public:
  RectPoset(int r, int s);
  /// {-r-s..r} x {-r-s..s}; the order and covers are those of Z^2.
  static RectPoset extended(int r, int s);

  int r() const { return r_; }
  int s() const { return s_; }
  int imin() const { return imin_; }
  int jmin() const { return jmin_; }
  bool is_extended() const { return imin_ != 0 || jmin_ != 0; }
  bool contains(const GridPoint& v) const;
  std::size_t size() const;
  /// Row-major over i then j.
  std::vector<GridPoint> elements() const;
  /// Throws OutOfRange naming v.
  void require(const GridPoint& v) const;

  bool operator==(const RectPoset& rhs) const = default;

 private:
  RectPoset(int r, int s, int imin, int jmin);
  int r_;
  int s_;
  int imin_ = 0;
  int jmin_ = 0;
};

struct CoverSet {
  std::vector<GridPoint> points;
  bool adjoined = false;  // the hat element is a neighbour.
};

/// Upper covers of v; adjoined means v is maximal (covered by the top).
CoverSet covers(const RectPoset& p, const GridPoint& v);
/// Lower covers of v; adjoined means v is minimal (covers the bottom).
CoverSet covered_by(const RectPoset& p, const GridPoint& v);

/// Decreasing rank; ties broken by decreasing i.
std::vector<GridPoint> linear_extension_desc(const RectPoset& p);

enum class FileCase { A, B, C };

struct File {
  int offset = 0;
  std::vector<GridPoint> points;  // decreasing rank
  FileCase kind = FileCase::C;
  /// The parameter d of the classification, read in the s <= r frame.
  int d = 0;
  /// True when the classification was made on the transposed rectangle.
  bool transposed = false;
};

/// {(i,j) : j - i = t}.  Throws OutOfRange unless -r <= t <= s.
File file_by_offset(const RectPoset& p, int t);

struct Region {
  RectPoset ambient{0, 0};
  GridPoint base;
  int k = 0;
  std::vector<GridPoint> members;  // row-major
  std::set<GridPoint> member_set;
  std::vector<GridPoint> sources;
  std::vector<GridPoint> sinks;

  bool contains(const GridPoint& v) const { return member_set.count(v) != 0; }
};

/// Largest order admitted at the base (m, n).
int hexagon_bound(const RectPoset& p, int m, int n);

/// Throws OutOfRange when (m, n) is outside p, HypothesisViolated when k is
/// negative or above hexagon_bound.
Region hexagon(const RectPoset& p, int m, int n, int k);

}  // namespace rowmotion
