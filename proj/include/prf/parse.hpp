#pragma once

#include "prf/poly.hpp"

#include <string_view>

namespace prf {

/// Parses polynomial text: integers, rationals `p/q`, identifiers
/// `[A-Za-z_][A-Za-z0-9_]*`, `+ - * ^`, parentheses. Division is accepted only
/// by a nonzero constant. Implicit multiplication is rejected. Variables enter
/// the universe in order of first appearance. Positions in errors are offset by
/// `line` / `column` so callers embedding expressions in files can report
/// file coordinates.
MultiPoly parse_poly(std::string_view text, int line = 1, int column = 1);

}  // namespace prf
