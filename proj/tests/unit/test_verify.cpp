#include <gtest/gtest.h>

#include <algorithm>

#include "rowmotion/errors.hpp"
#include "rowmotion/verify.hpp"
#include "test_support.hpp"

namespace rowmotion {
namespace {

using testing::F;
using testing::SameFunction;

bool has_note(const Report& report, const std::string& note) {
  return std::find(report.details.begin(), report.details.end(), note) != report.details.end();
}

std::string first_witness(const Report& report) { return report.witnesses.empty() ? "" : report.witnesses.front(); }

TEST(VerifyTest, ModeSelection) {
  EXPECT_EQ(resolve_mode(Mode::Auto, RectPoset(2, 2)), Mode::Symbolic);
  EXPECT_EQ(resolve_mode(Mode::Auto, RectPoset(3, 1)), Mode::Symbolic);
  EXPECT_EQ(resolve_mode(Mode::Auto, RectPoset(3, 2)), Mode::Rational);
  EXPECT_EQ(resolve_mode(Mode::Rational, RectPoset(1, 1)), Mode::Rational);
  EXPECT_EQ(parse_mode("symbolic"), Mode::Symbolic);
  EXPECT_THROW(parse_mode("float"), ParseError);
}

TEST(VerifyTest, Periodicity) {
  const Report square = check_periodicity(1, 1, Mode::Symbolic, 1, 0);
  EXPECT_TRUE(square.passed);
  EXPECT_TRUE(has_note(square, "observed minimal period 4"));
  const Report point = check_periodicity(0, 0, Mode::Symbolic, 1, 0);
  EXPECT_TRUE(point.passed);
  EXPECT_TRUE(has_note(point, "observed minimal period 2"));
  const Report sampled = check_periodicity(3, 2, Mode::Rational, 5, 11);
  EXPECT_TRUE(sampled.passed) << first_witness(sampled);
  EXPECT_EQ(sampled.trials, 5);
  EXPECT_EQ(std::count(sampled.details.begin(), sampled.details.end(), "observed minimal period 7"), 5);
  EXPECT_EQ(sampled.seed, 11u);
}

TEST(VerifyTest, Reciprocity) {
  EXPECT_TRUE(check_reciprocity(1, 1, Mode::Symbolic, 1, 0).passed);
  const Report sampled = check_reciprocity(3, 2, Mode::Rational, 3, 5);
  EXPECT_TRUE(sampled.passed) << first_witness(sampled);
}

TEST(VerifyTest, ReciprocityOnTheSquare) {
  const SymbolicLabeling f = generic_labeling(RectPoset(1, 1));
  const SymbolicLabeling once = rowmotion_birational(f);
  const SymbolicLabeling twice = rowmotion_birational(once);
  EXPECT_TRUE(SameFunction(once.at({0, 0}), F("1/x[1,1]")));
  EXPECT_TRUE(SameFunction(twice.at({0, 1}), F("1/x[1,0]")));
}

TEST(VerifyTest, MainFormula) {
  const Report square = check_main_formula(1, 1, Mode::Symbolic, 1, 0);
  EXPECT_TRUE(square.passed) << first_witness(square);
  EXPECT_EQ(square.trials, 16);
  const Report sampled = check_main_formula(2, 2, Mode::Rational, 3, 3);
  EXPECT_TRUE(sampled.passed) << first_witness(sampled);
  EXPECT_EQ(sampled.trials, 3);
}

TEST(VerifyTest, FileHomomesy) {
  EXPECT_TRUE(check_file_homomesy(1, 1, -1, Mode::Symbolic, 1, 0).passed);
  EXPECT_TRUE(check_file_homomesy(1, 1, 0, Mode::Symbolic, 1, 0).passed);
  const Report wide = check_file_homomesy(4, 3, -2, Mode::Rational, 2, 9);
  EXPECT_TRUE(wide.passed) << first_witness(wide);
  EXPECT_TRUE(has_note(wide, "file -2: case (a), d = 2"));
  const Report all = check_all_files(3, 2, Mode::Rational, 2, 1);
  EXPECT_TRUE(all.passed) << first_witness(all);
  EXPECT_THROW(check_file_homomesy(1, 1, 2, Mode::Symbolic, 1, 0), OutOfRange);
}

TEST(VerifyTest, FileProductOnTheSquare) {
  const SymbolicLabeling f = generic_labeling(RectPoset(1, 1));
  EXPECT_TRUE(SameFunction(period_product(file_statistic(f.poset(), -1), f), RatFn(1L)));
  EXPECT_TRUE(SameFunction(period_product(point_statistic({1, 0}), f), RatFn(1L)));
  // A single point off a file is not homomesic.
  EXPECT_FALSE(ratfn_equal(period_product(point_statistic({0, 0}), f), RatFn(1L)));
}

TEST(VerifyTest, Antipodal) {
  EXPECT_TRUE(check_antipodal(2, 1, Mode::Symbolic, 1, 0).passed);
  EXPECT_TRUE(check_antipodal(3, 2, Mode::Rational, 2, 4).passed);
}

TEST(VerifyTest, CombinatorialHomomesy) {
  const Report square = check_combinatorial_homomesy(1, 1);
  EXPECT_TRUE(square.passed) << first_witness(square);
  const Report three = check_combinatorial_homomesy(2, 2);
  EXPECT_TRUE(three.passed) << first_witness(three);
  EXPECT_TRUE(has_note(three, "20 ideals in 4 orbits"));
  EXPECT_TRUE(has_note(three, "file 0 average 3/2"));
}

TEST(VerifyTest, FailureCarriesWitness) {
  Report report;
  EXPECT_TRUE(report.passed);
  report.fail("input; observed 2; expected 1");
  EXPECT_FALSE(report.passed);
  EXPECT_EQ(report.witnesses.size(), 1u);
}

TEST(LedgerTest, WorkedFile) {
  const FileLedger ledger = file_ledger(4, 3, 2);
  EXPECT_TRUE(SameFunction(ledger.f3, RatFn(1L)));
  EXPECT_TRUE(SameFunction(ledger.f4 * ledger.f5, RatFn(1L)));
  EXPECT_TRUE(SameFunction(ledger.f1 * ledger.f2, RatFn(1L)));
  // File by file; the exponent-3 block lists the files j-i = -2, -1, 0, 1.
  const RatFn displayed = F(
      "A[4,0] * (A[4,1]*A[3,0])^2 * (A[4,2]*A[3,1]*A[2,0] * A[4,3]*A[3,2]*A[2,1]*A[1,0]"
      " * A[3,3]*A[2,2]*A[1,1]*A[0,0] * A[2,3]*A[1,2]*A[0,1])^3 * (A[1,3]*A[0,2])^2 * A[0,3]");
  EXPECT_TRUE(SameFunction(ledger.f1, displayed));
  EXPECT_TRUE(SameFunction(ledger.f1_expected, displayed));
  const Report report = check_file_ledger(4, 3, 2);
  EXPECT_TRUE(report.passed) << first_witness(report);
  EXPECT_TRUE(has_note(report, "F1 exponents by file j-i = -r..s: 1 2 3 3 3 3 2 1"));
}

TEST(LedgerTest, OtherFiles) {
  EXPECT_TRUE(check_file_ledger(2, 2, 1).passed);
  for (int r = 1; r <= 4; ++r) {
    for (int s = 1; s <= r; ++s) {
      for (int d = 0; d < s; ++d) EXPECT_TRUE(check_file_ledger(r, s, d).passed) << r << s << d;
    }
  }
  EXPECT_THROW(file_ledger(2, 3, 1), HypothesisViolated);
  EXPECT_THROW(file_ledger(3, 2, 2), HypothesisViolated);
}

}  // namespace
}  // namespace rowmotion
