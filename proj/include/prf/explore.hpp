#pragma once

#include "prf/dv.hpp"
#include "prf/execution.hpp"
#include "prf/realroots.hpp"
#include "prf/zdsat.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace prf {

/// A point {v} or an open interval (lo, hi) of the parameter line; a missing
/// interval endpoint stands for ±∞.
struct Cell {
  enum class Kind { Point, Open };
  Kind kind = Kind::Open;
  std::optional<CellPoint> lo, hi;
  /// Position in the unpruned sequence open, point, open, ..., open; two kept
  /// cells touch iff their indices are consecutive.
  std::size_t index = 0;

  bool is_point() const { return kind == Kind::Point; }
  /// The value of a point cell.
  const CellPoint& point() const { return *lo; }
  std::string to_string() const;
};

struct CellDecomposition {
  std::string parameter = "m";
  /// Real roots of the DV (and of the parameter-only conditions), increasing,
  /// each with an irreducible defining polynomial when factoring succeeds.
  std::vector<RealAlgebraicNumber> boundary;
  /// Cells surviving the parameter-only sign conditions, in order.
  std::vector<Cell> cells;
  /// The parameter-only conditions used for pruning.
  std::vector<UniPoly> pruning;
};

/// Throws ZeroPolynomial if the combined DV polynomial is zero.
CellDecomposition decompose(const DiscriminantVariety& dv, const ParametricSystem& sys);

struct Sample {
  std::size_t cell = 0;  // index into CellDecomposition::cells
  CellPoint point;
};

/// Points sample themselves; bounded open cells at the midpoint of separated
/// endpoint bounds; unbounded cells one unit beyond the outermost boundary (0
/// with no boundary). A nonzero seed moves open-cell samples to random
/// rationals inside the same cells.
std::vector<Sample> sample_plan(const CellDecomposition& dec, std::uint64_t seed = 0);

struct Endpoint {
  RealAlgebraicNumber value;
  bool closed = false;
};

/// An interval with optional endpoints (missing = ±∞); a point has two equal
/// closed endpoints.
struct Piece {
  std::optional<Endpoint> lo, hi;

  bool is_point() const;
  bool contains(const Rational& x) const;
  std::string to_string(const std::string& param) const;
};

struct SolutionSet {
  std::string parameter = "m";
  std::vector<Piece> pieces;
  /// Parameter-only hypotheses, e.g. "m > 0"; the formula is read under them.
  std::vector<std::string> assumptions;

  bool empty() const { return pieces.empty(); }
  bool contains(const Rational& x) const;
  /// "1 <= m < 2", pieces joined by " or "; "false" when empty, "true" for
  /// the whole line.
  std::string formula() const;
  /// "# assuming ..." header lines followed by the formula.
  std::string render() const;
};

bool operator==(const Piece& a, const Piece& b);
bool operator==(const SolutionSet& a, const SolutionSet& b);

/// Fuses runs of adjacent true cells into maximal pieces.
SolutionSet merge(const CellDecomposition& dec, const std::vector<bool>& truth);

struct SolveOptions {
  GroebnerCaps caps;
  std::uint64_t seed = 0;
  Execution exec = Execution::Parallel;
};

struct CellVerdict {
  Sample sample;
  SatVerdict verdict;
};

/// Everything solve computes, kept for auditing.
struct SolveReport {
  ParametricSystem system;
  DiscriminantVariety dv;
  CellDecomposition decomposition;
  std::vector<CellVerdict> verdicts;
  SolutionSet solution;
};

/// One verdict per sample; Parallel spreads samples over OpenMP threads.
std::vector<SatVerdict> evaluate_samples(const ParametricSystem& sys, const std::vector<Sample>& plan,
                                         const SolveOptions& opts = {});

/// Decomposition and verdicts for a given DV (used to inject a known DV).
SolveReport solve_with_dv(const ParametricSystem& sys, const DiscriminantVariety& dv, const SolveOptions& opts = {});

/// Errors carry the failing stage: "dv", "explore" or "zdsat".
SolveReport solve_report(const ParametricSystem& sys, const SolveOptions& opts = {});
SolutionSet solve(const ParametricSystem& sys, const SolveOptions& opts = {});

// JSON ---------------------------------------------------------------------

/// {polynomial, root_index, decimal, display}
nlohmann::json to_json(const RealAlgebraicNumber& a);
RealAlgebraicNumber ran_from_json(const nlohmann::json& j, const std::string& param);

nlohmann::json to_json(const SolutionSet& s);
SolutionSet solution_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SatVerdict& v);
nlohmann::json dv_to_json(const DiscriminantVariety& dv);
/// Solution, DV families, boundaries and per-cell verdicts.
nlohmann::json to_json(const SolveReport& r);

}  // namespace prf
