#include <gtest/gtest.h>

#include "rowmotion/avar.hpp"
#include "rowmotion/dynamics.hpp"
#include "rowmotion/errors.hpp"
#include "test_support.hpp"

namespace rowmotion {
namespace {

using testing::F;
using testing::SameFunction;

TEST(ChartTest, Entries) {
  const AChart chart = x_to_A(RectPoset(3, 2));
  EXPECT_TRUE(SameFunction(chart.a_values.at({0, 0}), F("1/x[0,0]")));
  EXPECT_TRUE(SameFunction(chart.a_values.at({1, 1}), F("(x[1,0]+x[0,1])/x[1,1]")));
  EXPECT_TRUE(SameFunction(chart.a_values.at({2, 1}), F("(x[2,0]+x[1,1])/x[2,1]")));
  EXPECT_TRUE(SameFunction(chart.a_values.at({3, 0}), F("x[2,0]/x[3,0]")));
  EXPECT_TRUE(SameFunction(chart.a_values.at({0, 2}), F("x[0,1]/x[0,2]")));
}

TEST(ChartTest, DirectPointMatchesChart) {
  std::mt19937_64 rng(8);
  const RectPoset p(3, 2);
  const AChart chart = x_to_A(p);
  for (int trial = 0; trial < 5; ++trial) {
    const Point x = labeling_point(random_labeling(p, rng));
    const Point a = a_point(p, x);
    for (const auto& [v, value] : chart.a_values) EXPECT_EQ(value.evaluate(x), a.at(avar(v.i, v.j)));
  }
}

TEST(ShiftTest, Examples) {
  EXPECT_EQ(shift_mu(F("A[2,1]*A[2,2]*A[3,1]*A[3,2]/(A[2,2]+A[3,1])"), 2, 1),
            F("A[0,0]*A[0,1]*A[1,0]*A[1,1]/(A[0,1]+A[1,0])"));
  const RatFn f = F("A[1,2]/(A[3,0]+A[2,1])");
  EXPECT_EQ(shift_mu(f, 0, 0), f);
  try {
    shift_mu(f, 0, 1);
    FAIL();
  } catch (const ShiftOutOfRange& e) {
    EXPECT_NE(std::string(e.what()).find("A[3,0]"), std::string::npos);
  }
}

TEST(ShiftTest, IsRingHomomorphism) {
  const RatFn f = F("A[2,2]*A[3,1] + A[4,2]");
  const RatFn g = F("1/(A[2,1] + A[3,3])");
  EXPECT_EQ(shift_mu(f * g, 1, 1), shift_mu(f, 1, 1) * shift_mu(g, 1, 1));
  EXPECT_EQ(shift_mu(f + g, 2, 1), shift_mu(f, 2, 1) + shift_mu(g, 2, 1));
}

TEST(AToXTest, Examples) {
  EXPECT_TRUE(SameFunction(a_to_x(F("A[0,0]*A[0,1]*A[1,0]*A[1,1]/(A[0,1]+A[1,0])"), RectPoset(1, 1)),
                           F("1/x[1,1]")));
  EXPECT_TRUE(SameFunction(a_to_x(F("A[0,0]"), RectPoset(1, 1)), F("1/x[0,0]")));
  EXPECT_TRUE(SameFunction(
      a_to_x(F("(A[0,1]*A[1,1]+A[0,1]*A[2,0]+A[1,0]*A[2,0])/(A[0,0]*A[0,1]*A[1,0]*A[1,1]*A[2,0]*A[2,1])"),
             RectPoset(3, 2)),
      F("x[2,1]")));
  EXPECT_THROW(a_to_x(F("A[4,0]"), RectPoset(3, 2)), UnboundVariable);
}

TEST(AToXTest, ShiftComposesWithSubstitution) {
  // The k = 2 display at (2,1) on [0,3]x[0,2] is mu^(1,0) of phi_1(1,0)/phi_2(1,0).
  const RatFn k1 = F(
      "(A[1,1]*A[1,2]*A[2,1]*A[2,2] + A[1,1]*A[1,2]*A[2,2]*A[3,0] + A[1,1]*A[1,2]*A[3,0]*A[3,1]"
      " + A[1,2]*A[2,0]*A[2,2]*A[3,0] + A[1,2]*A[2,0]*A[3,0]*A[3,1] + A[2,0]*A[2,1]*A[3,0]*A[3,1])"
      "/(A[1,2]+A[2,1]+A[3,0])");
  const RatFn k2 = F(
      "(A[0,1]*A[0,2]*A[1,1]*A[1,2] + A[0,1]*A[0,2]*A[1,2]*A[2,0] + A[0,1]*A[0,2]*A[2,0]*A[2,1]"
      " + A[0,2]*A[1,0]*A[1,2]*A[2,0] + A[0,2]*A[1,0]*A[2,0]*A[2,1] + A[1,0]*A[1,1]*A[2,0]*A[2,1])"
      "/(A[0,2]+A[1,1]+A[2,0])");
  EXPECT_EQ(shift_mu(k1, 1, 0), k2);
  const RectPoset p(3, 2);
  const RatFn via_shift = a_to_x(shift_mu(k1, 1, 0), p);
  EXPECT_TRUE(SameFunction(via_shift, a_to_x(k2, p)));
  // Against the dynamics: rho^3(2,1).
  EXPECT_TRUE(SameFunction(via_shift, iterate_birational(generic_labeling(p), 3).at({2, 1})));
}

}  // namespace
}  // namespace rowmotion
