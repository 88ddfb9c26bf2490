#include "rowmotion/verify.hpp"

#include <algorithm>
#include <map>

#include "rowmotion/avar.hpp"
#include "rowmotion/closed_form.hpp"
#include "rowmotion/errors.hpp"
#include "rowmotion/nilp.hpp"

namespace rowmotion {
namespace {

std::string grid_name(int r, int s) { return "[0," + std::to_string(r) + "]x[0," + std::to_string(s) + "]"; }

std::string witness(const std::string& input, const std::string& observed, const std::string& expected) {
  return input + "; observed " + observed + "; expected " + expected;
}

std::string point_name(const RationalLabeling& f) {
  std::string out = "{";
  for (const auto& v : f.poset().elements()) {
    if (out.size() > 1) out += ", ";
    out += v.to_string() + ": " + f.at(v).to_string();
  }
  return out + "}";
}

Report start(const std::string& name, int r, int s, Mode mode, std::uint64_t seed) {
  Report report;
  report.name = name;
  report.seed = seed;
  report.note(grid_name(r, s) + ", " + to_string(mode) + " mode");
  return report;
}

template <class V>
std::vector<Labeling<V>> period_iterates(const Labeling<V>& f) {
  const RectPoset& p = f.poset();
  std::vector<Labeling<V>> out{f};
  for (int k = 1; k <= p.r() + p.s() + 2; ++k) out.push_back(rowmotion_birational(out.back()));
  return out;
}

// Runs fn at `trials` random labelings, redrawing a labeling that hits a pole.
template <class Fn>
void at_random_points(const RectPoset& p, int trials, std::uint64_t seed, Report& report, Fn fn) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    for (int attempt = 1;; ++attempt) {
      const RationalLabeling f = random_labeling(p, rng);
      try {
        fn(f);
        break;
      } catch (const PoleEncountered&) {
        if (attempt >= kMaxResamples) throw;
      }
    }
    ++report.trials;
  }
}

RatFn shifted_phi(const RectPoset& p, int k, int m, int n, int a = 0, int b = 0) {
  return RatFn(shift_mu(phi(p, m, n, k).value, a, b));
}

}  // namespace

Mode resolve_mode(Mode mode, const RectPoset& p) {
  if (mode != Mode::Auto) return mode;
  return p.size() <= 9 ? Mode::Symbolic : Mode::Rational;
}

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Auto:
      return "auto";
    case Mode::Symbolic:
      return "symbolic";
    case Mode::Rational:
      return "rational";
  }
  return "auto";
}

Mode parse_mode(const std::string& text) {
  if (text == "auto") return Mode::Auto;
  if (text == "symbolic") return Mode::Symbolic;
  if (text == "rational") return Mode::Rational;
  throw ParseError("unknown mode '" + text + "' (expected symbolic, rational or auto)");
}

Statistic point_statistic(const GridPoint& v) {
  return {"value at " + v.to_string(), [v](const SymbolicLabeling& f) { return f.at(v); },
          [v](const RationalLabeling& f) { return f.at(v); }};
}

Statistic file_statistic(const RectPoset& p, int offset) {
  const File file = file_by_offset(p, offset);
  const std::vector<GridPoint> points = file.points;
  return {"product over file " + std::to_string(offset),
          [points](const SymbolicLabeling& f) {
            RatFn out(1L);
            for (const auto& v : points) out *= f.at(v);
            return out;
          },
          [points](const RationalLabeling& f) {
            Rational out(1L);
            for (const auto& v : points) out = out * f.at(v);
            return out;
          }};
}

RatFn period_product(const Statistic& stat, const SymbolicLabeling& f) {
  RatFn out(1L);
  const auto iterates = period_iterates(f);
  for (std::size_t k = 0; k + 1 < iterates.size(); ++k) out *= stat.symbolic(iterates[k]);
  return out;
}

Rational period_product(const Statistic& stat, const RationalLabeling& f) {
  Rational out(1L);
  const auto iterates = period_iterates(f);
  for (std::size_t k = 0; k + 1 < iterates.size(); ++k) out = out * stat.rational(iterates[k]);
  return out;
}

Report check_periodicity(int r, int s, Mode mode, int trials, std::uint64_t seed) {
  const RectPoset p(r, s);
  mode = resolve_mode(mode, p);
  Report report = start("periodicity", r, s, mode, seed);
  const int n = r + s + 2;
  if (mode == Mode::Symbolic) {
    const SymbolicLabeling f = generic_labeling(p);
    const auto iterates = period_iterates(f);
    int period = 0;
    for (int k = 1; k <= n && period == 0; ++k) {
      if (labelings_equal(iterates[static_cast<std::size_t>(k)], f)) period = k;
    }
    ++report.trials;
    report.note("observed minimal period " + std::to_string(period));
    if (!labelings_equal(iterates.back(), f)) {
      report.fail(witness("generic labeling", "rho^" + std::to_string(n) + " != identity", "identity"));
    }
    return report;
  }
  at_random_points(p, trials, seed, report, [&](const RationalLabeling& f) {
    const auto iterates = period_iterates(f);
    if (!labelings_equal(iterates.back(), f)) {
      report.fail(witness(point_name(f), "rho^" + std::to_string(n) + " f != f", "f"));
    }
    report.note("observed minimal period " + std::to_string(observed_period(f, n)));
  });
  return report;
}

Report check_reciprocity(int r, int s, Mode mode, int trials, std::uint64_t seed) {
  const RectPoset p(r, s);
  mode = resolve_mode(mode, p);
  Report report = start("reciprocity", r, s, mode, seed);
  if (mode == Mode::Symbolic) {
    const SymbolicLabeling f = generic_labeling(p);
    const auto iterates = period_iterates(f);
    for (const auto& v : p.elements()) {
      const RatFn value = iterates[static_cast<std::size_t>(v.i + v.j + 1)].at(v);
      const RatFn partner = f.at({r - v.i, s - v.j});
      if (!ratfn_equal(value * partner, RatFn(1L))) {
        report.fail(witness("rho^" + std::to_string(v.i + v.j + 1) + " at " + v.to_string(), value.to_string(),
                            "1/" + partner.to_string()));
      }
    }
    ++report.trials;
    return report;
  }
  at_random_points(p, trials, seed, report, [&](const RationalLabeling& f) {
    const auto iterates = period_iterates(f);
    for (const auto& v : p.elements()) {
      const Rational value = iterates[static_cast<std::size_t>(v.i + v.j + 1)].at(v);
      const Rational partner = f.at({r - v.i, s - v.j});
      if (!(value * partner).is_one()) {
        report.fail(witness(point_name(f) + " at " + v.to_string(), value.to_string(), inv(partner).to_string()));
      }
    }
  });
  return report;
}

Report check_main_formula(int r, int s, Mode mode, int points, std::uint64_t seed) {
  const RectPoset p(r, s);
  mode = resolve_mode(mode, p);
  Report report = start("main-formula", r, s, mode, seed);
  std::map<std::pair<GridPoint, int>, ClosedForm> forms;
  for (const auto& v : p.elements()) {
    for (int k = 0; k <= r + s + 1; ++k) forms.emplace(std::make_pair(v, k), rho_closed({p, v.i, v.j, k}));
  }
  auto query_name = [](const GridPoint& v, int k) {
    return "rho^" + std::to_string(k + 1) + " at " + v.to_string();
  };
  if (mode == Mode::Symbolic) {
    const auto iterates = period_iterates(generic_labeling(p));
    for (const auto& [key, form] : forms) {
      const auto& [v, k] = key;
      const RatFn closed = in_x_frame(form, p);
      const RatFn& direct = iterates[static_cast<std::size_t>(k + 1)].at(v);
      ++report.trials;
      if (!ratfn_equal(closed, direct)) report.fail(witness(query_name(v, k), closed.to_string(), direct.to_string()));
    }
    return report;
  }
  at_random_points(p, points, seed, report, [&](const RationalLabeling& f) {
    const Point x = labeling_point(f);
    const Point a = a_point(p, x);
    const auto iterates = period_iterates(f);
    for (const auto& [key, form] : forms) {
      const auto& [v, k] = key;
      const Rational closed = form.value.evaluate(form.frame == Frame::A ? a : x);
      const Rational& direct = iterates[static_cast<std::size_t>(k + 1)].at(v);
      if (closed != direct) {
        report.fail(witness(point_name(f) + ", " + query_name(v, k), closed.to_string(), direct.to_string()));
      }
    }
  });
  return report;
}

Report check_file_homomesy(int r, int s, int offset, Mode mode, int trials, std::uint64_t seed) {
  const RectPoset p(r, s);
  mode = resolve_mode(mode, p);
  const File file = file_by_offset(p, offset);
  Report report = start("file-homomesy", r, s, mode, seed);
  const char* kind = file.kind == FileCase::A ? "a" : file.kind == FileCase::B ? "b" : "c";
  report.note("file " + std::to_string(offset) + ": case (" + kind + "), d = " + std::to_string(file.d));
  const Statistic stat = file_statistic(p, offset);
  if (mode == Mode::Symbolic) {
    const RatFn product = period_product(stat, generic_labeling(p));
    ++report.trials;
    if (!ratfn_equal(product, RatFn(1L))) {
      report.fail(witness("file " + std::to_string(offset), product.to_string(), "1"));
    }
    return report;
  }
  at_random_points(p, trials, seed, report, [&](const RationalLabeling& f) {
    const Rational product = period_product(stat, f);
    if (!product.is_one()) {
      report.fail(witness(point_name(f) + ", file " + std::to_string(offset), product.to_string(), "1"));
    }
  });
  return report;
}

Report check_all_files(int r, int s, Mode mode, int trials, std::uint64_t seed) {
  const RectPoset p(r, s);
  mode = resolve_mode(mode, p);
  Report report = start("file-homomesy", r, s, mode, seed);
  for (int t = -r; t <= s; ++t) {
    const Report one = check_file_homomesy(r, s, t, mode, trials, seed + static_cast<std::uint64_t>(t + r));
    report.trials += one.trials;
    report.note(one.details.back());
    for (const auto& w : one.witnesses) report.fail(w);
  }
  return report;
}

Report check_antipodal(int r, int s, Mode mode, int trials, std::uint64_t seed) {
  const RectPoset p(r, s);
  mode = resolve_mode(mode, p);
  Report report = start("antipodal", r, s, mode, seed);
  auto pair_stat = [&](const GridPoint& v) {
    const GridPoint w{r - v.i, s - v.j};
    return Statistic{"antipodal " + v.to_string(),
                     [v, w](const SymbolicLabeling& f) { return f.at(v) * f.at(w); },
                     [v, w](const RationalLabeling& f) { return f.at(v) * f.at(w); }};
  };
  if (mode == Mode::Symbolic) {
    const SymbolicLabeling f = generic_labeling(p);
    for (const auto& v : p.elements()) {
      const RatFn product = period_product(pair_stat(v), f);
      if (!ratfn_equal(product, RatFn(1L))) report.fail(witness("pair at " + v.to_string(), product.to_string(), "1"));
    }
    ++report.trials;
    return report;
  }
  at_random_points(p, trials, seed, report, [&](const RationalLabeling& f) {
    for (const auto& v : p.elements()) {
      const Rational product = period_product(pair_stat(v), f);
      if (!product.is_one()) {
        report.fail(witness(point_name(f) + ", pair at " + v.to_string(), product.to_string(), "1"));
      }
    }
  });
  return report;
}

Report check_combinatorial_homomesy(int r, int s) {
  const RectPoset p(r, s);
  Report report;
  report.name = "combinatorial";
  report.note(grid_name(r, s));
  const auto ideals = all_order_ideals(p);
  const auto orbits = orbit_decomposition(p);
  const Rational expected(static_cast<long>(p.size()), 2L);
  report.note(std::to_string(ideals.size()) + " ideals in " + std::to_string(orbits.size()) + " orbits");

  auto orbit_average = [](const std::vector<OrderIdeal>& orbit, auto count) {
    long total = 0;
    for (const auto& ideal : orbit) total += count(ideal);
    return Rational(total, static_cast<long>(orbit.size()));
  };
  for (const auto& orbit : orbits) {
    ++report.trials;
    const Rational avg = orbit_average(orbit, [](const OrderIdeal& ideal) { return static_cast<long>(ideal.size()); });
    if (avg != expected) {
      report.fail(witness("orbit of size " + std::to_string(orbit.size()) + ", #I", avg.to_string(),
                          expected.to_string()));
    }
  }
  for (int t = -r; t <= s; ++t) {
    const File file = file_by_offset(p, t);
    auto in_file = [&file](const OrderIdeal& ideal) {
      return static_cast<long>(std::count_if(file.points.begin(), file.points.end(),
                                             [&ideal](const GridPoint& v) { return ideal.contains(v); }));
    };
    const Rational global = orbit_average(ideals, in_file);
    for (const auto& orbit : orbits) {
      const Rational avg = orbit_average(orbit, in_file);
      if (avg != global) {
        report.fail(witness("file " + std::to_string(t) + ", orbit of size " + std::to_string(orbit.size()),
                            avg.to_string(), global.to_string()));
      }
    }
    report.note("file " + std::to_string(t) + " average " + global.to_string());
  }
  return report;
}

FileLedger file_ledger(int r, int s, int d) {
  if (!(0 <= d && d < s && s <= r)) {
    throw HypothesisViolated("ledger needs 0 <= d < s <= r, got r=" + std::to_string(r) + " s=" + std::to_string(s) +
                             " d=" + std::to_string(d));
  }
  const RectPoset p(r, s);
  FileLedger out{RatFn(1L), RatFn(1L), RatFn(1L), RatFn(1L), RatFn(1L), RatFn(1L)};
  for (int c = 0; c < d; ++c) {
    out.f1 *= shifted_phi(p, 0, r - c, d - c);
    out.f1 *= shifted_phi(p, 0, r - c, d - c, r - c, d - c);
  }
  for (int k = 0; k <= r - d; ++k) out.f1 *= shifted_phi(p, 0, r - d, 0, k, 0);

  RatFn f2_inverse(1L);
  for (int c = 1; c <= d; ++c) {
    f2_inverse *= shifted_phi(p, 0, c, s - d + c);
    f2_inverse *= shifted_phi(p, 0, c, s - d + c, c, s - d + c);
  }
  for (int j = 0; j <= s - d; ++j) f2_inverse *= shifted_phi(p, 0, 0, s - d, 0, j);
  out.f2 = inv(f2_inverse);

  RatFn f3_inverse(1L);
  for (int k = 0; k <= d; ++k) f3_inverse *= shifted_phi(p, k + 1, r - k, d - k);
  for (int k = d + 1; k <= r; ++k) f3_inverse *= shifted_phi(p, d + 1, r - d, 0, k - d, 0);
  for (int k = r + 1; k <= r + d; ++k) f3_inverse *= shifted_phi(p, r + d + 1 - k, k - d, k - r, k - d, k - r);
  out.f3 = inv(f3_inverse);

  for (int k = r + 1 - d; k <= r + 1; ++k) out.f4 *= shifted_phi(p, k + d - r, r + 1 - k, r + s + 1 - k - d);
  for (int k = r + 2; k <= r + s + 1 - d; ++k) out.f4 *= shifted_phi(p, d + 1, 0, s - d, 0, k - r - 1);
  for (int k = r + s + 2 - d; k <= r + s + 1; ++k) {
    const int a = k + d - r - s - 1;
    const int b = k - r - 1;
    out.f5 *= shifted_phi(p, r + s + 2 - k, a, b, a, b);
  }

  std::vector<std::pair<VarId, int>> factors;
  for (const auto& v : p.elements()) {
    factors.emplace_back(avar(v.i, v.j), std::min({r + 1 - v.i + v.j, s + 1 + v.i - v.j, d + 1}));
  }
  out.f1_expected = RatFn(Polynomial(Monomial(std::move(factors)), 1));
  return out;
}

Report check_file_ledger(int r, int s, int d) {
  Report report;
  report.name = "ledger";
  report.note(grid_name(r, s) + ", d = " + std::to_string(d));
  const FileLedger ledger = file_ledger(r, s, d);
  const RatFn one(1L);
  report.trials = 4;
  if (!ratfn_equal(ledger.f3, one)) report.fail(witness("F3", ledger.f3.to_string(), "1"));
  if (!ratfn_equal(ledger.f4 * ledger.f5, one)) report.fail(witness("F4*F5", (ledger.f4 * ledger.f5).to_string(), "1"));
  if (!ratfn_equal(ledger.f1, ledger.f1_expected)) {
    report.fail(witness("F1", ledger.f1.to_string(), ledger.f1_expected.to_string()));
  }
  if (!ratfn_equal(ledger.f1 * ledger.f2, one)) report.fail(witness("F1*F2", (ledger.f1 * ledger.f2).to_string(), "1"));
  std::string exponents;
  for (int t = -r; t <= s; ++t) {
    if (!exponents.empty()) exponents += ' ';
    exponents += std::to_string(std::min({r + 1 + t, s + 1 - t, d + 1}));
  }
  report.note("F1 exponents by file j-i = -r..s: " + exponents);
  return report;
}

}  // namespace rowmotion
