#include <gtest/gtest.h>

#include "rowmotion/dynamics.hpp"
#include "rowmotion/errors.hpp"
#include "test_support.hpp"

namespace rowmotion {
namespace {

using testing::F;
using testing::SameFunction;

// 2x2 labels: w bottom, x = (1,0), y = (0,1), z top.
const char* W = "x[0,0]";
const char* X = "x[1,0]";
const char* Y = "x[0,1]";
const char* Z = "x[1,1]";

RatFn E(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case 'w': out += W; break;
      case 'x': out += X; break;
      case 'y': out += Y; break;
      case 'z': out += Z; break;
      default: out += c;
    }
  }
  return F(out);
}

void ExpectLabels(const SymbolicLabeling& f, const std::string& bottom, const std::string& left,
                  const std::string& right, const std::string& top) {
  EXPECT_TRUE(SameFunction(f.at({0, 0}), E(bottom)));
  EXPECT_TRUE(SameFunction(f.at({1, 0}), E(left)));
  EXPECT_TRUE(SameFunction(f.at({0, 1}), E(right)));
  EXPECT_TRUE(SameFunction(f.at({1, 1}), E(top)));
}

TEST(BirationalTest, ToggleAtTop) {
  const auto f = generic_labeling(RectPoset(1, 1));
  ExpectLabels(toggle_birational(f, {1, 1}), "w", "x", "y", "(x+y)/z");
  const auto single = generic_labeling(RectPoset(0, 0));
  EXPECT_TRUE(SameFunction(toggle_birational(single, {0, 0}).at({0, 0}), F("1/x[0,0]")));
}

TEST(BirationalTest, TwoByTwoIterates) {
  const auto f = generic_labeling(RectPoset(1, 1));
  ExpectLabels(iterate_birational(f, 1), "1/z", "(x+y)*w/(x*z)", "(x+y)*w/(y*z)", "(x+y)/z");
  ExpectLabels(iterate_birational(f, 2), "z/(x+y)", "1/y", "1/x", "(x+y)*w/(x*y)");
  ExpectLabels(iterate_birational(f, 3), "x*y/((x+y)*w)", "y*z/((x+y)*w)", "x*z/((x+y)*w)", "1/w");
  EXPECT_TRUE(labelings_equal(iterate_birational(f, 4), f));
  EXPECT_TRUE(labelings_equal(iterate_birational(f, 0), f));
}

TEST(BirationalTest, SingletonRowmotion) {
  const auto f = generic_labeling(RectPoset(0, 0));
  EXPECT_TRUE(SameFunction(rowmotion_birational(f).at({0, 0}), F("1/x[0,0]")));
  EXPECT_TRUE(labelings_equal(iterate_birational(f, 2), f));
}

TEST(BirationalTest, EvaluationModeMatchesSymbolic) {
  const RectPoset p(1, 1);
  // w=7, x=2, y=3, z=5 in elements() order (0,0), (0,1), (1,0), (1,1).
  const RationalLabeling f(p, {Rational(7L), Rational(3L), Rational(2L), Rational(5L)});
  const auto g = rowmotion_birational(f);
  EXPECT_EQ(g.at({1, 1}), Rational(1L));
  EXPECT_EQ(g.at({1, 0}), Rational(mpz_class(7), mpz_class(2)));
  EXPECT_EQ(g.at({0, 1}), Rational(mpz_class(7), mpz_class(3)));
  EXPECT_EQ(g.at({0, 0}), Rational(mpz_class(1), mpz_class(5)));
}

TEST(BirationalTest, PoleInEvaluationMode) {
  const RectPoset p(1, 1);
  RationalLabeling f(p, {Rational(1L), Rational(1L), Rational(-1L), Rational(1L)});
  EXPECT_THROW(toggle_birational(f, {0, 0}), PoleEncountered);
}

TEST(BirationalProperty, ToggleIsInvolution) {
  for (const auto& [r, s] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    const auto f = generic_labeling(RectPoset(r, s));
    for (const auto& v : f.poset().elements()) {
      EXPECT_TRUE(labelings_equal(toggle_birational(toggle_birational(f, v), v), f));
    }
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_labeling(RectPoset(3, 2), rng);
    for (const auto& v : f.poset().elements()) {
      EXPECT_TRUE(labelings_equal(toggle_birational(toggle_birational(f, v), v), f));
    }
  }
}

TEST(BirationalProperty, LinearExtensionIndependence) {
  std::mt19937_64 rng(17);
  for (int r = 0; r <= 3; ++r) {
    for (int s = 0; s <= 3; ++s) {
      const RectPoset p(r, s);
      auto order = linear_extension_desc(p);
      std::stable_sort(order.begin(), order.end(), [](const GridPoint& a, const GridPoint& b) {
        if (a.rank() != b.rank()) return a.rank() > b.rank();
        return a.i < b.i;
      });
      for (int trial = 0; trial < 3; ++trial) {
        const auto f = random_labeling(p, rng);
        EXPECT_TRUE(labelings_equal(rowmotion_birational(f), rowmotion_birational(f, order)));
      }
    }
  }
  const auto g = generic_labeling(RectPoset(1, 2));
  auto order = linear_extension_desc(g.poset());
  std::reverse(order.begin(), order.end());
  EXPECT_THROW(rowmotion_birational(g, order), PreconditionViolated);
}

TEST(BirationalProperty, Periodicity) {
  std::mt19937_64 rng(23);
  for (int r = 0; r <= 3; ++r) {
    for (int s = 0; s <= 3; ++s) {
      const auto f = random_labeling(RectPoset(r, s), rng);
      EXPECT_TRUE(labelings_equal(iterate_birational(f, r + s + 2), f)) << r << "x" << s;
    }
  }
  EXPECT_TRUE(labelings_equal(iterate_birational(generic_labeling(RectPoset(2, 1)), 5),
                              generic_labeling(RectPoset(2, 1))));
}

TEST(RandomTest, PositiveAndInRange) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const Rational v = random_positive_rational(rng);
    ASSERT_TRUE(v.is_positive());
    ASSERT_LE(v, Rational(1L << 16));
    ASSERT_GE(v, Rational(mpz_class(1), mpz_class(256)));
  }
  std::mt19937_64 a(99);
  std::mt19937_64 b(99);
  EXPECT_TRUE(labelings_equal(random_labeling(RectPoset(2, 2), a), random_labeling(RectPoset(2, 2), b)));
}

TEST(PiecewiseLinearTest, Examples) {
  RationalLabeling t(RectPoset(0, 0), {Rational(mpz_class(1), mpz_class(3))});
  EXPECT_EQ(toggle_pl(t, {0, 0}).at({0, 0}), Rational(mpz_class(2), mpz_class(3)));
  // By hand: the top becomes 1 + 1/2 - 1/2, then both middle elements
  // min(1) + 1/2 - 1/2, then the bottom 1 + 0 - 1/2.
  const Rational half(mpz_class(1), mpz_class(2));
  RationalLabeling h(RectPoset(1, 1), {half, half, half, half});
  const RationalLabeling g = rowmotion_pl(h);
  EXPECT_EQ(g.at({1, 1}), Rational(1L));
  EXPECT_EQ(g.at({1, 0}), Rational(1L));
  EXPECT_EQ(g.at({0, 1}), Rational(1L));
  EXPECT_EQ(g.at({0, 0}), half);
  RationalLabeling bad(RectPoset(0, 0), {Rational(2L)});
  EXPECT_THROW(toggle_pl(bad, {0, 0}), OutOfRangeValue);
}

// Oracle: the combinatorial toggle by the ideal rule.
std::set<GridPoint> toggle_ideal(const RectPoset& p, std::set<GridPoint> members, const GridPoint& v) {
  if (members.count(v)) {
    for (const auto& z : covers(p, v).points) {
      if (members.count(z)) return members;
    }
    members.erase(v);
  } else {
    for (const auto& w : covered_by(p, v).points) {
      if (!members.count(w)) return members;
    }
    members.insert(v);
  }
  return members;
}

// Oracle: rowmotion as the ideal generated by the minimal non-members.
std::set<GridPoint> rowmotion_by_minimal_elements(const OrderIdeal& ideal) {
  const RectPoset& p = ideal.poset();
  std::set<GridPoint> out;
  for (const auto& v : p.elements()) {
    if (ideal.contains(v)) continue;
    bool minimal = true;
    for (const auto& w : covered_by(p, v).points) minimal = minimal && ideal.contains(w);
    if (!minimal) continue;
    for (const auto& u : p.elements()) {
      if (u.i <= v.i && u.j <= v.j) out.insert(u);
    }
  }
  return out;
}

// Random points of the order polytope: sorted values along a random linear
// extension are order preserving.
RationalLabeling random_polytope_point(const RectPoset& p, std::mt19937_64& rng) {
  std::vector<Rational> draws;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Rational v = random_positive_rational(rng);
    draws.push_back(v / (v + Rational(1L)));
  }
  std::sort(draws.begin(), draws.end());
  auto order = linear_extension_desc(p);
  std::reverse(order.begin(), order.end());
  RationalLabeling f(p, std::vector<Rational>(p.size(), Rational(0L)));
  for (std::size_t k = 0; k < order.size(); ++k) f.set(order[k], draws[k]);
  return f;
}

TEST(PiecewiseLinearProperty, Periodicity) {
  std::mt19937_64 rng(41);
  for (int r = 0; r <= 3; ++r) {
    for (int s = 0; s <= 3; ++s) {
      const RectPoset p(r, s);
      for (int trial = 0; trial < 3; ++trial) {
        const RationalLabeling f = random_polytope_point(p, rng);
        RationalLabeling g = f;
        for (int n = 0; n < r + s + 2; ++n) g = rowmotion_pl(g);
        EXPECT_TRUE(labelings_equal(g, f)) << r << "x" << s;
      }
    }
  }
}

TEST(CombinatorialTest, PlToggleMatchesIdealToggle) {
  for (int r = 0; r <= 2; ++r) {
    for (int s = 0; s <= 2; ++s) {
      const RectPoset p(r, s);
      for (const auto& ideal : all_order_ideals(p)) {
        for (const auto& v : p.elements()) {
          const OrderIdeal toggled = labeling_ideal(toggle_pl(ideal_labeling(ideal), v));
          EXPECT_EQ(toggled.members(), toggle_ideal(p, ideal.members(), v));
        }
        EXPECT_EQ(rowmotion_combinatorial(ideal).members(), rowmotion_by_minimal_elements(ideal));
      }
    }
  }
}

TEST(CombinatorialTest, TwoByTwoOrbits) {
  const RectPoset p(1, 1);
  EXPECT_EQ(rowmotion_combinatorial(OrderIdeal(p, {})).members(), (std::set<GridPoint>{{0, 0}}));
  const auto ideals = all_order_ideals(p);
  EXPECT_EQ(ideals.size(), 6u);
  std::size_t total = 0;
  for (const auto& o : orbit_decomposition(p)) {
    total += o.size();
    EXPECT_EQ(4 % static_cast<int>(o.size()), 0);
  }
  EXPECT_EQ(total, 6u);
  const OrderIdeal full(p, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  EXPECT_NO_THROW(rowmotion_combinatorial(full));
  EXPECT_THROW(OrderIdeal(p, {{1, 1}}), PreconditionViolated);
}

TEST(CombinatorialTest, IdealCountsAreBinomial) {
  // |J([0,r]x[0,s])| = C(r+s+2, r+1).
  EXPECT_EQ(all_order_ideals(RectPoset(2, 2)).size(), 20u);
  EXPECT_EQ(all_order_ideals(RectPoset(3, 2)).size(), 35u);
  EXPECT_EQ(all_order_ideals(RectPoset(3, 3)).size(), 70u);
}

TEST(PeriodTest, ObservedPeriod) {
  std::mt19937_64 rng(5);
  EXPECT_EQ(observed_period(random_labeling(RectPoset(2, 1), rng), 20), 5);
  EXPECT_EQ(observed_period(random_labeling(RectPoset(0, 0), rng), 20), 2);
}

}  // namespace
}  // namespace rowmotion
