#pragma once

#include "prf/dv.hpp"
#include "prf/groebner.hpp"
#include "prf/realroots.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace prf::cli {

struct RunConfig {
  /// solve, dv, cells, builtin or plot.
  std::string subcommand;
  /// Exactly one input source.
  std::optional<std::string> path;
  std::optional<std::string> builtin;
  bool json = false;
  std::uint64_t seed = 0;
  GroebnerCaps caps;
  bool serial = false;
  /// plot only.
  std::string svg_path;
  /// m_lo, m_hi, v_lo, v_hi.
  std::optional<std::array<double, 4>> window;
  /// builtin --list.
  bool list = false;
};

/// Exit status: 0 success (an empty answer included), 1 parse/input error,
/// 2 math-stage error (reported with the stage name).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses the command line and runs it.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "pairs=N,degree=D,seconds=S" (any subset); throws Error(Parse).
GroebnerCaps parse_caps(const std::string& text);

struct PlotWindow {
  double x0 = -5, x1 = 5, y0 = -5, y1 = 5;
};

/// Heuristic window around the DV roots and the curve's real branches.
PlotWindow default_window(const ParametricSystem& sys, const std::vector<RealAlgebraicNumber>& boundary);

/// Marching squares on a 512x512 grid over the window for the single
/// equation f(m, v) = 0; segments where all conditions hold are drawn
/// heavier; DV roots inside the window are dashed verticals.
std::string render_svg(const ParametricSystem& sys, const PlotWindow& w,
                       const std::vector<RealAlgebraicNumber>& boundary);

}  // namespace prf::cli
