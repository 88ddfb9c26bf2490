#include "rowmotion/serialize.hpp"

#include "rowmotion/errors.hpp"
#include "rowmotion/expr_parse.hpp"

namespace rowmotion {
namespace {

template <class V>
Json labeling_common(const Labeling<V>& f, const char* mode) {
  Json labels = Json::object();
  for (const auto& v : f.poset().elements()) labels[v.to_string()] = f.at(v).to_string();
  return {{"r", f.poset().r()}, {"s", f.poset().s()}, {"mode", mode}, {"labels", labels}};
}

Json region_json(const Region& region) { return {{"base", region.base.to_string()}, {"k", region.k}}; }

}  // namespace

Json labeling_json(const SymbolicLabeling& f) { return labeling_common(f, "symbolic"); }
Json labeling_json(const RationalLabeling& f) { return labeling_common(f, "rational"); }

LoadedLabeling parse_labeling_json(const Json& j) {
  if (!j.is_object()) throw ParseError("labeling must be a JSON object");
  for (const char* key : {"r", "s", "mode", "labels"}) {
    if (!j.contains(key)) throw ParseError(std::string("labeling is missing \"") + key + "\"");
  }
  if (!j["r"].is_number_integer() || !j["s"].is_number_integer()) throw ParseError("\"r\" and \"s\" must be integers");
  const std::string mode = j["mode"].is_string() ? j["mode"].get<std::string>() : "";
  if (mode != "symbolic" && mode != "rational") throw ParseError("\"mode\" must be \"symbolic\" or \"rational\"");
  const int r = j["r"].get<int>();
  const int s = j["s"].get<int>();
  if (r < 0 || s < 0) throw ParseError("\"r\" and \"s\" must be nonnegative");
  const RectPoset p(r, s);
  const Json& labels = j["labels"];
  if (!labels.is_object() || labels.size() != p.size()) {
    throw ParseError("\"labels\" must map each of the " + std::to_string(p.size()) + " points to a value");
  }
  std::vector<RatFn> values;
  for (const auto& v : p.elements()) {
    const std::string key = v.to_string();
    if (!labels.contains(key) || !labels[key].is_string()) throw ParseError("missing label for " + key);
    values.push_back(parse_ratfn(labels[key].get<std::string>()));
  }
  LoadedLabeling out;
  out.rational = mode == "rational";
  if (out.rational) {
    std::vector<Rational> numbers;
    for (std::size_t t = 0; t < values.size(); ++t) {
      const RatFn& f = values[t];
      if (!f.num().is_constant() || !f.den().is_constant()) {
        throw ParseError("rational labeling has a non-constant value " + f.to_string());
      }
      numbers.push_back(Rational(f.num().constant_term(), f.den().constant_term()));
    }
    out.values = RationalLabeling(p, std::move(numbers));
  }
  out.symbolic = SymbolicLabeling(p, std::move(values));
  return out;
}

Json report_json(const Report& report) {
  return {{"name", report.name},         {"passed", report.passed},       {"seed", report.seed},
          {"trials", report.trials},     {"witnesses", report.witnesses}, {"details", report.details}};
}

Json family_json(const NilpFamily& family) {
  Json out = Json::array();
  for (const auto& path : family.paths) out.push_back({{"source", path.source().to_string()}, {"steps", path.steps()}});
  return out;
}

Json overlay_json(const ColoredOverlay& o) {
  Json edges = Json::array();
  for (const auto& ce : o.edges()) {
    edges.push_back({{"from", ce.edge.lo.to_string()},
                     {"to", ce.edge.hi.to_string()},
                     {"color", ce.color == Color::Blue ? "blue" : "red"}});
  }
  return {{"blue", {{"region", region_json(o.blue_region)}, {"paths", family_json(o.blue)}}},
          {"red", {{"region", region_json(o.red_region)}, {"paths", family_json(o.red)}}},
          {"edges", edges}};
}

}  // namespace rowmotion
