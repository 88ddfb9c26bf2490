#pragma once

/**
 * @file serialize.hpp
 * @brief JSON forms of labelings, reports, path families and overlays.
 *
 * Labeling: {"r", "s", "mode": "symbolic"|"rational", "labels": {"i,j": text}}
 * with values rendered by to_string, so a labeling written by the CLI reads
 * back unchanged.
 */

#include <json.hpp>
#include <string>

#include "rowmotion/bounce.hpp"
#include "rowmotion/dynamics.hpp"
#include "rowmotion/nilp.hpp"
#include "rowmotion/report.hpp"

namespace rowmotion {

using Json = nlohmann::json;

Json labeling_json(const SymbolicLabeling& f);
Json labeling_json(const RationalLabeling& f);

struct LoadedLabeling {
  bool rational = false;
  SymbolicLabeling symbolic{RectPoset(0, 0), {RatFn()}};
  RationalLabeling values{RectPoset(0, 0), {Rational(0L)}};
};

/// Throws ParseError on a missing field, a missing or extra label, or a
/// non-constant value in rational mode.
LoadedLabeling parse_labeling_json(const Json& j);

Json report_json(const Report& report);
/// [{"source": "i,j", "steps": "RU..."}, ...]
Json family_json(const NilpFamily& family);
/// {"blue": {...}, "red": {...}, "edges": [{"from", "to", "color"}, ...]}
Json overlay_json(const ColoredOverlay& o);

}  // namespace rowmotion
