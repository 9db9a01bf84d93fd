#pragma once

#include "prf/dv.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace prf {

/// Isosceles: a = b. Right: right angle at C, a² + b² = c².
enum class TriangleClass { Isosceles, Right };

std::string to_string(TriangleClass c);

/// Quantity names: sides a b c, medians m_a m_b m_c, perimeter p,
/// semiperimeter s, area, inradius r, circumradius R.
const std::vector<std::string>& quantity_names();

/// numerator / denominator over quantity names, e.g. R / r.
struct TriangleProblem {
  TriangleClass cls = TriangleClass::Isosceles;
  /// The side set to 1.
  std::string normalized_side = "c";
  MultiPoly numerator, denominator;
  /// Source text of the ratio, for display.
  std::string ratio_text;
};

/// Parses "<expr> / <expr>" (any rational expression in the quantities with
/// + - * / ^ and rational constants) into numerator and denominator. Throws
/// ParseError with positions shifted by line/column, UnknownQuantity for
/// names outside quantity_names().
std::pair<MultiPoly, MultiPoly> parse_ratio(const std::string& text, int line = 1, int column = 1);

TriangleProblem make_problem(TriangleClass cls, const std::string& normalized_side, const std::string& ratio);

struct LegendEntry {
  std::string variable;
  std::string meaning;
  /// Defining relation in the generated system ("" for free sides).
  std::string definition;
};

struct GeneratedSystem {
  ParametricSystem system;
  /// One entry per bound variable, in system order.
  std::vector<LegendEntry> legend;
};

/// Introduces variables for the quantities used (and those they depend on),
/// their defining identities, the class constraint, the normalization, the
/// ratio equation numerator − m·denominator, side/quantity positivity and the
/// reduced triangle inequalities, and m > 0 when the ratio is positive on
/// the class. m-free equations linear in a quantity with constant coefficient
/// (p, s) are eliminated by substitution. Throws NonSquareAfterElimination.
GeneratedSystem generate(const TriangleProblem& p);

/// Exact values (floating point) of every quantity for sides a, b, c.
std::map<std::string, double> numeric_quantities(double a, double b, double c);

struct BuiltinProblem {
  std::string name;
  std::string description;
  TriangleProblem problem;
};

const std::vector<BuiltinProblem>& builtins();
/// Throws NotFound.
const BuiltinProblem& builtin(const std::string& name);

}  // namespace prf
