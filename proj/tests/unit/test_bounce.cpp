#include <gtest/gtest.h>

#include <algorithm>

#include "rowmotion/bounce.hpp"
#include "rowmotion/closed_form.hpp"
#include "rowmotion/errors.hpp"

namespace rowmotion {
namespace {

NilpFamily family(const std::vector<std::pair<GridPoint, std::string>>& paths) {
  NilpFamily out;
  for (const auto& [source, steps] : paths) out.paths.push_back(LatticePath::from_steps(source, steps));
  return out;
}

// k = 5 on [0,7]x[0,7] at (i,j) = (5,5), read off the worked diagram.
ColoredOverlay worked_overlay() {
  return make_overlay(RectPoset(7, 7), 5, 5, 5,
                      family({{{4, 0}, "RRRUUU"},
                              {{3, 1}, "URRURU"},
                              {{2, 2}, "UURRRU"},
                              {{1, 3}, "UURURR"},
                              {{0, 4}, "UUURRR"}}),
                      family({{{4, 1}, "RURURU"}, {{3, 2}, "RUUURR"}, {{2, 3}, "UURURR"}, {{1, 4}, "UURURR"}}));
}

// All plain-range (i, j, k) on grids with r, s <= 3 and r + s <= 5.
std::vector<std::tuple<RectPoset, int, int, int>> plain_queries() {
  std::vector<std::tuple<RectPoset, int, int, int>> out;
  for (int r = 0; r <= 3; ++r) {
    for (int s = 0; s <= 3 && r + s <= 5; ++s) {
      const RectPoset p(r, s);
      for (const auto& v : p.elements()) {
        for (int k = 1; k <= std::min(v.i, v.j); ++k) out.emplace_back(p, v.i, v.j, k);
      }
    }
  }
  return out;
}

std::vector<ColoredOverlay> all_overlays(const RectPoset& p, int i, int j, int k) {
  const Region blue = hexagon(p, i - k, j - k, k);
  const Region red = hexagon(p, i - k + 1, j - k + 1, k - 1);
  std::vector<ColoredOverlay> out;
  for (const auto& b : enum_nilp(blue)) {
    for (const auto& r : enum_nilp(red)) out.push_back(make_overlay(blue, red, b, r));
  }
  return out;
}

TEST(BounceTest, WorkedHorizontalPath) {
  const BounceDecomposition d = decompose(worked_overlay());
  EXPECT_EQ(d.horizontal.compass(), "NE,NE,NE,NW,NW,SW,NW,SW,SE,NE,SE,SW,NW,SW,NW,NW,SW,SW,NW,SW,SE");
  EXPECT_EQ(d.horizontal.start, (GridPoint{0, 4}));
  EXPECT_EQ(d.vertical.start, (GridPoint{4, 0}));
  EXPECT_EQ(d.vertical.end(), (GridPoint{6, 4}));
  EXPECT_EQ(d.side, Side::Left);
  EXPECT_EQ(d.twigs.size(), 3u);
}

TEST(BounceTest, WorkedSwapImage) {
  const ColoredOverlay o = worked_overlay();
  const auto [side, image] = swap(o);
  EXPECT_EQ(side, Side::Left);
  EXPECT_EQ(image.blue_region.base, (GridPoint{1, 0}));
  EXPECT_EQ(image.red_region.base, (GridPoint{0, 1}));
  EXPECT_EQ(image.blue, family({{{5, 0}, "RRUUU"},
                                {{4, 1}, "RUURU"},
                                {{3, 2}, "RUURU"},
                                {{2, 3}, "UURUR"},
                                {{1, 4}, "UURUR"}}));
  EXPECT_EQ(image.red,
            family({{{3, 1}, "URRRURU"}, {{2, 2}, "UURRURR"}, {{1, 3}, "UURURRR"}, {{0, 4}, "UUURRRR"}}));
  EXPECT_EQ(unswap(side, image), o);
  EXPECT_EQ(overlay_weight(o, RectPoset(7, 7)), overlay_weight(image, RectPoset(7, 7)));
}

TEST(BounceTest, OrderOneHasOnlyVerticalPath) {
  const RectPoset p(2, 2);
  for (const auto& o : all_overlays(p, 1, 1, 1)) {
    const BounceDecomposition d = decompose(o);
    EXPECT_TRUE(d.twigs.empty());
    EXPECT_TRUE(d.horizontal.steps.empty());
    ASSERT_EQ(d.vertical.steps.size() + 1, o.blue.paths[0].vertices().size());
    for (std::size_t t = 0; t < d.vertical.steps.size(); ++t) {
      EXPECT_EQ(d.vertical.steps[t].edge.lo, o.blue.paths[0].vertices()[t]);
    }
  }
}

TEST(BounceTest, MalformedInputs) {
  const RectPoset p(2, 2);
  const Region blue = hexagon(p, 0, 0, 2);
  const Region red = hexagon(p, 1, 1, 1);
  EXPECT_THROW(make_overlay(blue, red, family({{{1, 0}, "RUU"}}), family({{{1, 1}, "RU"}})), MalformedOverlay);
  EXPECT_THROW(make_overlay(blue, red, family({{{1, 0}, "UUR"}, {{0, 1}, "URR"}}), family({{{1, 1}, "RU"}})),
               MalformedOverlay);
  const auto good = all_overlays(p, 2, 2, 2).front();
  const ColoredOverlay shifted{good.blue_region, hexagon(p, 0, 1, 1), good.blue, NilpFamily{}};
  EXPECT_THROW(decompose(shifted), MalformedOverlay);
  EXPECT_THROW(unswap(Side::Left, good), MalformedOverlay);
}

TEST(BounceTest, ExhaustiveDecompositionProperties) {
  for (const auto& [p, i, j, k] : plain_queries()) {
    for (const auto& o : all_overlays(p, i, j, k)) {
      const BounceDecomposition d = decompose(o);
      std::multiset<ColoredEdge> used;
      for (const auto* path : {&d.vertical, &d.horizontal}) {
        for (const auto& step : path->steps) {
          EXPECT_EQ(step.upward, step.color == Color::Blue) << o.to_string();
          used.insert({step.edge, step.color});
        }
      }
      for (const auto& twig : d.twigs) used.insert({twig, Color::Blue});
      for (const auto& ce : used) EXPECT_EQ(used.count(ce), 1u) << o.to_string();
      EXPECT_EQ(d.twigs.size(), static_cast<std::size_t>(std::max(k - 2, 0)));
      const auto all = o.edges();
      EXPECT_TRUE(std::includes(all.begin(), all.end(), used.begin(), used.end())) << o.to_string();
    }
  }
}

TEST(BounceTest, ExhaustiveRoundTripAndWeights) {
  std::size_t count = 0;
  for (const auto& [p, i, j, k] : plain_queries()) {
    for (const auto& o : all_overlays(p, i, j, k)) {
      const auto [side, image] = swap(o);
      EXPECT_EQ(overlay_weight(o, p), overlay_weight(image, p)) << o.to_string();
      EXPECT_EQ(unswap(side, image), o) << o.to_string();
      ++count;
    }
  }
  EXPECT_GT(count, 100u);
}

TEST(PluckerTest, UnitWeightCounts) {
  const RectPoset p(3, 2);
  const Report report = plucker_check(p, 2, 1, 1);
  EXPECT_TRUE(report.passed) << (report.witnesses.empty() ? "" : report.witnesses.front());
  EXPECT_NE(std::find(report.details.begin(), report.details.end(), "lhs 6, left 3, right 3"), report.details.end());
}

TEST(PluckerTest, PlainRangeExhaustive) {
  for (const auto& [p, i, j, k] : plain_queries()) {
    const Report report = plucker_check(p, i, j, k);
    EXPECT_EQ(report.name, "plucker");
    EXPECT_TRUE(report.passed) << report.details.front() << ": " << report.witnesses.front();
  }
}

TEST(PluckerTest, GeneralLemma) {
  const RectPoset p(3, 2);
  for (const auto& [i, j, k] : {std::tuple{2, 1, 2}, std::tuple{1, 0, 1}, std::tuple{3, 0, 2}}) {
    const Report report = plucker_check(p, i, j, k);
    EXPECT_EQ(report.name, "plucker-general");
    EXPECT_TRUE(report.passed) << (report.witnesses.empty() ? "" : report.witnesses.front());
  }
  // [k-i]_+ + [k-j]_+ = 3 > k here.
  EXPECT_THROW(plucker_check(p, 1, 0, 2), HypothesisViolated);
  EXPECT_THROW(plucker_check(p, 0, 0, 1), HypothesisViolated);
  EXPECT_THROW(plucker_check(p, 1, 1, 0), HypothesisViolated);
  EXPECT_THROW(plucker_check(p, 3, 2, 7), HypothesisViolated);
}

TEST(PluckerTest, GeneralLemmaExhaustive) {
  for (int r = 0; r <= 3; ++r) {
    for (int s = 0; s <= 3 && r + s <= 5; ++s) {
      const RectPoset p(r, s);
      for (const auto& v : p.elements()) {
        for (int k = 1; k <= r + s + 1; ++k) {
          if (positive_part(k - v.i) + positive_part(k - v.j) > k) continue;
          const Report report = plucker_check_general(p, v.i, v.j, k);
          EXPECT_TRUE(report.passed) << report.details.front() << ": "
                                     << (report.witnesses.empty() ? "" : report.witnesses.front());
        }
      }
    }
  }
}

TEST(HuggingTest, ForcedRoutes) {
  const Region region = hexagon(RectPoset::extended(3, 2), -1, -1, 3);
  EXPECT_TRUE(hugging_families(region, 2, 2).empty());
  for (const auto& f : hugging_families(region, 1, 1)) {
    const auto& first = f.paths.front();
    EXPECT_EQ(first.steps().find("UR"), std::string::npos);
    EXPECT_EQ(f.paths.back().steps().find("RU"), std::string::npos);
  }
  EXPECT_EQ(hugging_families(region, 0, 0).size(), enum_nilp(region).size());
}

}  // namespace
}  // namespace rowmotion
