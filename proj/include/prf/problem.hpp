#pragma once

#include "prf/geometry.hpp"

#include <optional>
#include <string>

namespace prf {

/// A problem file, one construct per line, `#` starts a comment:
///
///   triangle mode                raw mode
///   class: isosceles|right       param: m
///   normalize: a|b|c = 1         vars: b, c
///   ratio: <expr> / <expr>       eq: <poly>
///                                pos: <poly>
///
/// Modes do not mix. `normalize` defaults to c = 1; `param` defaults to m;
/// without `vars` the bound variables are those of the equations in order of
/// appearance.
struct ProblemFile {
  std::optional<TriangleProblem> triangle;
  ParametricSystem raw;

  /// The system to solve (generated in triangle mode) with its legend.
  GeneratedSystem system() const;
};

/// Throws ParseError ("line:col: message") on malformed input, including an
/// empty file ("no equations"), and UnknownQuantity (also positioned) for
/// names outside the quantity list in a ratio.
ProblemFile parse_problem_file(const std::string& text);

/// Reads and parses a file; an unreadable file is an Error of kind Parse.
ProblemFile load_problem_file(const std::string& path);

}  // namespace prf
