#pragma once

#include "prf/dv.hpp"
#include "prf/groebner.hpp"
#include "prf/realroots.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace prf {

/// Closed rational box component of a witness.
struct WitnessInterval {
  std::string var;
  Rational lo, hi;
};

struct SatVerdict {
  enum class Status { Sat, Unsat };
  Status status = Status::Unsat;
  /// Real solutions satisfying every strict condition.
  int count = 0;
  /// Present iff sat: a box around one such solution.
  std::optional<std::vector<WitnessInterval>> witness;

  bool sat() const { return status == Status::Sat; }
};

struct ZdOptions {
  GroebnerCaps caps;
  /// Seeds the random linear forms tried when the default one does not
  /// separate the solutions.
  std::uint64_t seed = 0;
  int max_retries = 5;
};

/// The system with the parameter replaced by a rational.
struct SpecializedSystem {
  std::vector<std::string> vars;
  std::vector<MultiPoly> equations;
  std::vector<MultiPoly> positives;
  Rational parameter_value;
};

SpecializedSystem specialize(const ParametricSystem& sys, const Rational& m0);

/// Counts the real solutions of a square zero-dimensional system over Q with
/// all `positives` strictly positive. Components inside the zero set of a
/// condition are discarded first (they cannot hold a solution).
SatVerdict solve_zero_dimensional(const std::vector<std::string>& vars, const std::vector<MultiPoly>& equations,
                                  const std::vector<MultiPoly>& positives, const ZdOptions& opts = {});

SatVerdict sat_at_rational(const ParametricSystem& sys, const Rational& m0, const ZdOptions& opts = {});

/// The parameter becomes a bound variable tied to a's defining polynomial
/// and isolating interval.
SatVerdict sat_at_algebraic(const ParametricSystem& sys, const RealAlgebraicNumber& a, const ZdOptions& opts = {});

/// Dispatches on the rational fast path.
SatVerdict sat_at(const ParametricSystem& sys, const CellPoint& p, const ZdOptions& opts = {});

/// Solution counts at k distinct random rationals of the open cell (lo, hi);
/// a missing endpoint means unbounded on that side.
std::vector<int> count_constancy_probe(const ParametricSystem& sys, const std::optional<CellPoint>& lo,
                                       const std::optional<CellPoint>& hi, int k, std::uint64_t seed = 0,
                                       const ZdOptions& opts = {});

/// Rational interval arithmetic (Horner per variable, naive products).
struct Interval {
  Rational lo, hi;
};
Interval interval_eval(const MultiPoly& p, const std::vector<WitnessInterval>& box);

}  // namespace prf
