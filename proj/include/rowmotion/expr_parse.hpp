#pragma once

#include <string>

#include "rowmotion/ratfn.hpp"

namespace rowmotion {

/// Parses the rendering produced by RatFn::to_string (and hand-written
/// fixtures): integers, x[i,j], A[i,j], + - * / ^ and parentheses.
/// Throws ParseError with the offending position.
RatFn parse_ratfn(const std::string& text);

}  // namespace rowmotion
