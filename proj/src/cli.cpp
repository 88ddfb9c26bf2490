#include "rowmotion/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "rowmotion/bounce.hpp"
#include "rowmotion/closed_form.hpp"
#include "rowmotion/errors.hpp"
#include "rowmotion/serialize.hpp"
#include "rowmotion/verify.hpp"

namespace rowmotion::cli {
namespace {

// A usage error detected after parsing; the message already names the flag.
struct UsageError : Error {
  using Error::Error;
};

struct Options {
  bool plain = false;
  int r = 0;
  int s = 0;
  std::optional<int> r_opt, s_opt;
  int i = 0;
  int j = 0;
  int k = 0;
  int m = 0;
  int n = 0;
  std::optional<int> i_opt, j_opt, k_opt;
  std::optional<int> d;
  std::string mode = "symbolic";
  std::string verify_mode = "auto";
  std::string frame = "a";
  std::string labels;
  std::string ideal;
  bool ideal_given = false;
  bool list_families = false;
  std::string check;
  int trials = 5;
  std::uint64_t seed = 0;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Reduces an iteration count modulo the period r+s+2.
int reduce_k(int k, const RectPoset& p, std::ostream& err) {
  const int period = p.r() + p.s() + 2;
  if (k <= period - 1) return k;
  const int reduced = k % period;
  err << "notice: --k " << k << " reduced to " << reduced << " (period " << period << ")\n";
  return reduced;
}

void require_point(const RectPoset& p, int i, int j, const std::string& fi, const std::string& fj) {
  if (i < 0 || i > p.r()) throw UsageError(fi + " " + std::to_string(i) + " outside [0," + std::to_string(p.r()) + "]");
  if (j < 0 || j > p.s()) throw UsageError(fj + " " + std::to_string(j) + " outside [0," + std::to_string(p.s()) + "]");
}

std::string ideal_text(const OrderIdeal& ideal) {
  std::string out;
  for (const auto& v : ideal.members()) out += (out.empty() ? "" : ";") + v.to_string();
  return out;
}

// The down-closure of the listed generators.
OrderIdeal parse_ideal(const RectPoset& p, const std::string& text) {
  std::set<GridPoint> members;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.empty()) continue;
    GridPoint g;
    try {
      g = parse_grid_point(item);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--ideal: ") + e.what());
    }
    if (!p.contains(g)) throw UsageError("--ideal: " + g.to_string() + " is outside the poset");
    for (int a = 0; a <= g.i; ++a) {
      for (int b = 0; b <= g.j; ++b) members.insert({a, b});
    }
  }
  return OrderIdeal(p, std::move(members));
}

template <class V>
void print_labeling(std::ostream& out, const Labeling<V>& f) {
  for (const auto& v : f.poset().elements()) out << v.to_string() << ": " << f.at(v).to_string() << '\n';
}

int do_iterate(const Options& o, std::ostream& out, std::ostream& err) {
  std::optional<LoadedLabeling> loaded;
  if (!o.labels.empty()) {
    std::ifstream file(o.labels);
    if (!file) throw UsageError("--labels: cannot read " + o.labels);
    Json j;
    try {
      j = Json::parse(file);
    } catch (const Json::parse_error& e) {
      throw UsageError(std::string("--labels: ") + e.what());
    }
    try {
      loaded = parse_labeling_json(j);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--labels: ") + e.what());
    }
    const RectPoset& lp = loaded->symbolic.poset();
    if ((o.r_opt && *o.r_opt != lp.r()) || (o.s_opt && *o.s_opt != lp.s())) {
      throw UsageError("--labels: file is on [0," + std::to_string(lp.r()) + "]x[0," + std::to_string(lp.s()) +
                       "], which disagrees with --r/--s");
    }
  } else if (!o.r_opt || !o.s_opt) {
    throw UsageError(std::string(o.r_opt ? "--s" : "--r") + " is required without --labels");
  }
  const RectPoset p = loaded ? loaded->symbolic.poset() : RectPoset(*o.r_opt, *o.s_opt);
  const int k = reduce_k(o.k, p, err);
  const bool rational = loaded ? loaded->rational : o.mode == "rational";
  if (rational) {
    std::mt19937_64 rng(o.seed);
    const RationalLabeling f = loaded ? loaded->values : random_labeling(p, rng);
    const RationalLabeling image = iterate_birational(f, k);
    if (o.plain) {
      print_labeling(out, image);
    } else {
      emit(out, labeling_json(image));
    }
  } else {
    const SymbolicLabeling f = loaded ? loaded->symbolic : generic_labeling(p);
    const SymbolicLabeling image = iterate_birational(f, k);
    if (o.plain) {
      print_labeling(out, image);
    } else {
      emit(out, labeling_json(image));
    }
  }
  return kExitOk;
}

int do_formula(const Options& o, std::ostream& out, std::ostream& err) {
  const RectPoset p(o.r, o.s);
  require_point(p, o.i, o.j, "--i", "--j");
  IterateQuery q{p, o.i, o.j, reduce_k(o.k, p, err)};
  const ClosedForm form = rho_closed(q);
  RatFn value = form.value;
  Frame frame = form.frame;
  if (o.frame == "x" && frame == Frame::A) {
    value = in_x_frame(form, p);
    frame = Frame::X;
  }
  const std::string frame_name = frame == Frame::A ? "a" : "x";
  if (o.plain) {
    out << value.to_string() << '\n';
    if (frame_name != o.frame) err << "notice: value is in the " << frame_name << "-frame\n";
  } else {
    emit(out, {{"r", o.r},
               {"s", o.s},
               {"i", o.i},
               {"j", o.j},
               {"k", q.k},
               {"case", form.which == FormulaCase::A ? "a" : "b"},
               {"frame", frame_name},
               {"value", value.to_string()}});
  }
  return kExitOk;
}

int do_phi(const Options& o, std::ostream& out) {
  const RectPoset p(o.r, o.s);
  require_point(p, o.m, o.n, "--m", "--n");
  const int bound = hexagon_bound(p, o.m, o.n);
  if (o.k > bound) throw UsageError("--k " + std::to_string(o.k) + " exceeds the bound " + std::to_string(bound));
  const PhiPolynomial f = phi(p, o.m, o.n, o.k);
  if (o.plain) {
    out << f.value.to_string() << '\n';
    if (o.list_families) {
      for (const auto& family : enum_nilp(f.region)) {
        std::string line;
        for (const auto& path : family.paths) {
          line += (line.empty() ? "" : " ") + path.source().to_string() + ":" + path.steps();
        }
        out << (line.empty() ? "(empty)" : line) << "  " << uncovered_monomial(f.region, family).to_string() << '\n';
      }
    }
    return kExitOk;
  }
  Json j = {{"r", o.r}, {"s", o.s}, {"m", o.m}, {"n", o.n}, {"k", o.k}, {"value", f.value.to_string()}};
  if (o.list_families) {
    Json families = Json::array();
    for (const auto& family : enum_nilp(f.region)) {
      families.push_back(
          {{"paths", family_json(family)}, {"weight", uncovered_monomial(f.region, family).to_string()}});
    }
    j["families"] = families;
  }
  emit(out, j);
  return kExitOk;
}

Json orbit_json(const std::vector<OrderIdeal>& cycle, const RectPoset& p) {
  Rational total(0L);
  Json ideals = Json::array();
  for (const auto& ideal : cycle) {
    ideals.push_back(ideal_text(ideal));
    total = total + Rational(static_cast<long>(ideal.size()));
  }
  Json files = Json::object();
  for (int t = -p.r(); t <= p.s(); ++t) {
    const File file = file_by_offset(p, t);
    long count = 0;
    for (const auto& ideal : cycle) {
      for (const auto& v : file.points) count += ideal.contains(v) ? 1 : 0;
    }
    files[std::to_string(t)] = (Rational(count) / Rational(static_cast<long>(cycle.size()))).to_string();
  }
  const Rational size(static_cast<long>(cycle.size()));
  return {{"length", cycle.size()},
          {"ideals", ideals},
          {"average_size", (total / size).to_string()},
          {"file_averages", files}};
}

int do_orbit(const Options& o, std::ostream& out) {
  const RectPoset p(o.r, o.s);
  std::vector<std::vector<OrderIdeal>> orbits;
  if (o.ideal_given) {
    orbits.push_back(orbit(parse_ideal(p, o.ideal)));
  } else {
    orbits = orbit_decomposition(p);
  }
  Json list = Json::array();
  for (const auto& cycle : orbits) list.push_back(orbit_json(cycle, p));
  if (o.plain) {
    for (const auto& entry : list) {
      out << "orbit of length " << entry["length"].get<std::size_t>() << ", average #I "
          << entry["average_size"].get<std::string>() << '\n';
      for (const auto& ideal : entry["ideals"]) {
        const std::string text = ideal.get<std::string>();
        out << "  {" << text << "}\n";
      }
    }
    return kExitOk;
  }
  emit(out, {{"r", o.r}, {"s", o.s}, {"orbits", list}});
  return kExitOk;
}

Report merge(std::string name, const std::vector<Report>& parts, std::uint64_t seed) {
  Report out;
  out.name = std::move(name);
  out.seed = seed;
  for (const auto& part : parts) {
    out.trials += part.trials;
    for (const auto& w : part.witnesses) out.fail(w);
    if (!part.passed && part.witnesses.empty()) out.fail(part.details.empty() ? part.name : part.details.front());
    for (const auto& d : part.details) out.note(d);
  }
  return out;
}

Report plucker_report(const Options& o) {
  const RectPoset p(o.r, o.s);
  if (o.i_opt || o.j_opt || o.k_opt) {
    if (!o.i_opt || !o.j_opt || !o.k_opt) throw UsageError("--i, --j and --k must be given together");
    require_point(p, *o.i_opt, *o.j_opt, "--i", "--j");
    const int M = positive_part(*o.k_opt - *o.i_opt) + positive_part(*o.k_opt - *o.j_opt);
    if (*o.k_opt < 1 || *o.k_opt > o.r + o.s + 1 || M > *o.k_opt) {
      throw UsageError("--k " + std::to_string(*o.k_opt) + " is not a valid order at (" +
                       std::to_string(*o.i_opt) + "," + std::to_string(*o.j_opt) + ")");
    }
    return plucker_check(p, *o.i_opt, *o.j_opt, *o.k_opt);
  }
  std::vector<Report> parts;
  for (const auto& v : p.elements()) {
    for (int k = 1; k <= o.r + o.s + 1; ++k) {
      if (positive_part(k - v.i) + positive_part(k - v.j) > k) continue;
      parts.push_back(plucker_check(p, v.i, v.j, k));
    }
  }
  Report out = merge("plucker", parts, 0);
  out.trials = static_cast<long>(parts.size());
  return out;
}

int do_verify(const Options& o, std::ostream& out) {
  const Mode mode = resolve_mode(parse_mode(o.verify_mode), RectPoset(o.r, o.s));
  Report report;
  if (o.check == "periodicity") {
    report = check_periodicity(o.r, o.s, mode, o.trials, o.seed);
  } else if (o.check == "reciprocity") {
    report = check_reciprocity(o.r, o.s, mode, o.trials, o.seed);
  } else if (o.check == "main-formula") {
    report = check_main_formula(o.r, o.s, mode, o.trials, o.seed);
  } else if (o.check == "file-homomesy") {
    report = check_all_files(o.r, o.s, mode, o.trials, o.seed);
  } else if (o.check == "antipodal") {
    report = check_antipodal(o.r, o.s, mode, o.trials, o.seed);
  } else if (o.check == "plucker") {
    report = plucker_report(o);
  } else if (o.check == "combinatorial") {
    report = check_combinatorial_homomesy(o.r, o.s);
  } else {
    if (!o.d) throw UsageError("--d is required for the ledger check");
    if (*o.d < 0 || *o.d >= o.s || o.s > o.r) {
      throw UsageError("--d " + std::to_string(*o.d) + " needs 0 <= d < s <= r");
    }
    report = check_file_ledger(o.r, o.s, *o.d);
  }
  if (o.plain) {
    out << report.name << ": " << (report.passed ? "PASS" : "FAIL") << '\n';
    for (const auto& d : report.details) out << "  " << d << '\n';
    for (const auto& w : report.witnesses) out << "  witness: " << w << '\n';
  } else {
    emit(out, report_json(report));
  }
  return report.passed ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Birational rowmotion on [0,r]x[0,s]", "rowmotion"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--plain", o.plain, "Human-readable output instead of JSON");

  const auto nonneg = CLI::NonNegativeNumber;
  auto* iterate = app.add_subcommand("iterate", "Labeling after K rowmotion steps");
  iterate->add_option("--r", o.r_opt)->check(nonneg);
  iterate->add_option("--s", o.s_opt)->check(nonneg);
  iterate->add_option("--k", o.k)->required()->check(nonneg);
  iterate->add_option("--mode", o.mode)->check(CLI::IsMember({"symbolic", "rational"}));
  iterate->add_option("--seed", o.seed);
  iterate->add_option("--labels", o.labels, "Labeling JSON to start from");

  auto* formula = app.add_subcommand("formula", "Closed form of rho^K at (I, J)");
  formula->add_option("--r", o.r)->required()->check(nonneg);
  formula->add_option("--s", o.s)->required()->check(nonneg);
  formula->add_option("--i", o.i)->required();
  formula->add_option("--j", o.j)->required();
  formula->add_option("--k", o.k)->required()->check(nonneg);
  formula->add_option("--frame", o.frame)->check(CLI::IsMember({"a", "x"}));

  auto* phi_cmd = app.add_subcommand("phi", "NILP generating polynomial of a hexagon");
  phi_cmd->add_option("--r", o.r)->required()->check(nonneg);
  phi_cmd->add_option("--s", o.s)->required()->check(nonneg);
  phi_cmd->add_option("--m", o.m)->required();
  phi_cmd->add_option("--n", o.n)->required();
  phi_cmd->add_option("--k", o.k)->required()->check(nonneg);
  phi_cmd->add_flag("--list-families", o.list_families);

  auto* orbit_cmd = app.add_subcommand("orbit", "Combinatorial rowmotion orbits");
  orbit_cmd->add_option("--r", o.r)->required()->check(nonneg);
  orbit_cmd->add_option("--s", o.s)->required()->check(nonneg);
  auto* ideal_opt = orbit_cmd->add_option("--ideal", o.ideal, "Generators \"i,j;i,j;...\"");

  auto* verify = app.add_subcommand("verify", "Run one verification check");
  verify
      ->add_option("check", o.check)
      ->required()
      ->check(CLI::IsMember({"periodicity", "reciprocity", "main-formula", "file-homomesy", "antipodal", "plucker",
                             "ledger", "combinatorial"}));
  verify->add_option("--r", o.r)->required()->check(nonneg);
  verify->add_option("--s", o.s)->required()->check(nonneg);
  verify->add_option("--d", o.d);
  verify->add_option("--i", o.i_opt);
  verify->add_option("--j", o.j_opt);
  verify->add_option("--k", o.k_opt);
  verify->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed);
  verify->add_option("--mode", o.verify_mode)->check(CLI::IsMember({"auto", "symbolic", "rational"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  o.ideal_given = ideal_opt->count() > 0;

  try {
    if (*iterate) return do_iterate(o, out, err);
    if (*formula) return do_formula(o, out, err);
    if (*phi_cmd) return do_phi(o, out);
    if (*orbit_cmd) return do_orbit(o, out);
    return do_verify(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const HypothesisViolated& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "arithmetic fault: " << e.what() << '\n';
    return kExitArithmetic;
  }
}

}  // namespace rowmotion::cli
