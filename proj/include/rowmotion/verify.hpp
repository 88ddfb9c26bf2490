#pragma once

/**
 * @file verify.hpp
 * @brief Executable checks of periodicity, reciprocity, the closed form,
 * file homomesy (birational and combinatorial) and the cancellation ledger
 * behind file homomesy.
 *
 * Every check is deterministic given its seed.  Rational-mode checks work
 * at random positive points; a point that hits a pole is redrawn up to
 * kMaxResamples times before PoleEncountered propagates.
 */

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rowmotion/dynamics.hpp"
#include "rowmotion/report.hpp"

namespace rowmotion {

enum class Mode { Auto, Symbolic, Rational };

inline constexpr int kMaxResamples = 8;

/// Auto becomes Symbolic when (r+1)(s+1) <= 9.
Mode resolve_mode(Mode mode, const RectPoset& p);
std::string to_string(Mode mode);
/// "symbolic", "rational" or "auto".  Throws ParseError.
Mode parse_mode(const std::string& text);

/// A statistic on birational labelings, e.g. the value at (i, j) or the
/// product over a file.
struct Statistic {
  std::string name;
  std::function<RatFn(const SymbolicLabeling&)> symbolic;
  std::function<Rational(const RationalLabeling&)> rational;
};

Statistic point_statistic(const GridPoint& v);
Statistic file_statistic(const RectPoset& p, int offset);

/// Product of the statistic over rho^0 f, ..., rho^{r+s+1} f.
RatFn period_product(const Statistic& stat, const SymbolicLabeling& f);
Rational period_product(const Statistic& stat, const RationalLabeling& f);

/// rho^{r+s+2} f = f; records the observed minimal period at each point.
Report check_periodicity(int r, int s, Mode mode, int trials, std::uint64_t seed);
/// rho^{i+j+1}(i, j) * x[r-i, s-j] = 1 for every (i, j).
Report check_reciprocity(int r, int s, Mode mode, int trials, std::uint64_t seed);
/// rho_closed against iterate_birational for every (i, j) and k in
/// [0, r+s+1].  Symbolic mode compares in the x-variables; rational mode
/// evaluates the A-frame forms at the A-point of each sample.
Report check_main_formula(int r, int s, Mode mode, int points, std::uint64_t seed);
/// The period product over the file j - i = offset equals 1.
Report check_file_homomesy(int r, int s, int offset, Mode mode, int trials, std::uint64_t seed);
/// check_file_homomesy over every file, noting each file's case.
Report check_all_files(int r, int s, Mode mode, int trials, std::uint64_t seed);
/// The period product of f(i, j) f(r-i, s-j) equals 1 for every (i, j).
Report check_antipodal(int r, int s, Mode mode, int trials, std::uint64_t seed);
/// Orbit averages of #I and of #(I meet F) for each file.
Report check_combinatorial_homomesy(int r, int s);

/// The five leftover blocks for the file with top (r, d), d < s <= r.
struct FileLedger {
  RatFn f1, f2, f3, f4, f5;
  /// prod A_ij^min(r+1-i+j, s+1+i-j, d+1).
  RatFn f1_expected;
};

/// Throws HypothesisViolated unless 0 <= d < s <= r.
FileLedger file_ledger(int r, int s, int d);
/// F3 = 1, F4 F5 = 1, F1 matches its exponent pattern and F1 F2 = 1.
Report check_file_ledger(int r, int s, int d);

}  // namespace rowmotion
