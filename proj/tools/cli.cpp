#include "cli.hpp"

#include "prf/error.hpp"
#include "prf/explore.hpp"
#include "prf/factor.hpp"
#include "prf/geometry.hpp"
#include "prf/problem.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace prf::cli {

namespace {

/// Thrown for input problems (exit 1).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  GeneratedSystem generated;
  std::string title;
};

Loaded load(const RunConfig& cfg) {
  if (cfg.path.has_value() == cfg.builtin.has_value())
    throw InputError("exactly one input source expected: a problem file or --builtin NAME");
  ProblemFile file;
  Loaded out;
  try {
    if (cfg.path) {
      file = load_problem_file(*cfg.path);
      out.title = *cfg.path;
    } else {
      const auto& b = builtin(*cfg.builtin);
      file.triangle = b.problem;
      out.title = b.name + ": " + b.description;
    }
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  try {
    out.generated = file.system();
  } catch (const Error& e) {
    throw e.stage().empty() ? e.with_stage("geometry") : e;
  }
  return out;
}

SolveOptions solve_options(const RunConfig& cfg) {
  SolveOptions o;
  o.caps = cfg.caps;
  o.seed = cfg.seed;
  o.exec = cfg.serial ? Execution::Serial : Execution::Parallel;
  return o;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string family_text(const std::vector<UniPoly>& fam) {
  if (fam.empty()) return "(none)";
  std::vector<std::string> parts;
  for (const auto& p : fam) parts.push_back(p.is_constant() ? p.to_string() : factored_string(p));
  return join(parts, "; ");
}

std::string roots_text(const std::vector<RealAlgebraicNumber>& roots) {
  if (roots.empty()) return "(none)";
  std::vector<std::string> parts;
  for (const auto& r : roots) parts.push_back(display(r));
  return join(parts, ", ");
}

/// Real roots of the combined polynomial, each tagged with its irreducible factor.
std::vector<RealAlgebraicNumber> dv_roots(const DiscriminantVariety& dv) {
  std::vector<RealAlgebraicNumber> roots;
  if (dv.combined.is_constant()) return roots;
  for (const auto& f : factor_square_free(dv.combined))
    for (auto& r : isolate_roots(f)) roots.push_back(std::move(r));
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string point_text(const CellPoint& p) { return p.is_rational() ? to_string(p.rational_value()) : display(p); }

std::string verdict_text(const SatVerdict& v) {
  std::string s = (v.sat() ? "sat" : "unsat") + std::string(" ") + std::to_string(v.count);
  if (v.witness) {
    std::vector<std::string> parts;
    for (const auto& w : *v.witness)
      parts.push_back(w.var + " in [" + to_decimal(w.lo, 6) + ", " + to_decimal(w.hi, 6) + "]");
    s += "  " + join(parts, ", ");
  }
  return s;
}

void print_legend(const GeneratedSystem& g, std::ostream& out) {
  bool any = std::any_of(g.legend.begin(), g.legend.end(), [](const LegendEntry& e) { return !e.definition.empty(); });
  if (!any) return;
  out << "legend:\n";
  for (const auto& e : g.legend)
    out << "  " << e.variable << ": " << e.meaning << (e.definition.empty() ? "" : "  [" + e.definition + "]") << "\n";
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const Loaded in = load(cfg);
  const SolveReport r = solve_report(in.generated.system, solve_options(cfg));
  if (cfg.json) out << to_json(r).dump(2) << "\n";
  else out << r.solution.render();
  return 0;
}

int cmd_dv(const RunConfig& cfg, std::ostream& out) {
  const Loaded in = load(cfg);
  const ParametricSystem& sys = in.generated.system;
  DiscriminantVariety dv;
  std::vector<RealAlgebraicNumber> roots;
  try {
    sys.validate();
    sys.require_square();
    dv = discriminant_variety(sys, cfg.caps, cfg.serial ? Execution::Serial : Execution::Parallel);
    roots = dv_roots(dv);
  } catch (const Error& e) {
    throw e.with_stage("dv");
  }
  if (cfg.json) {
    nlohmann::json j = dv_to_json(dv);
    j["roots"] = nlohmann::json::array();
    for (const auto& r : roots) j["roots"].push_back(to_json(r));
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "O_crit: " << family_text(dv.crit) << "\n";
  out << "O_in:   " << family_text(dv.in) << "\n";
  out << "O_inf:  " << family_text(dv.inf) << "\n";
  out << "roots:  " << roots_text(roots) << "\n";
  return 0;
}

int cmd_cells(const RunConfig& cfg, std::ostream& out) {
  const Loaded in = load(cfg);
  const SolveReport r = solve_report(in.generated.system, solve_options(cfg));
  if (cfg.json) {
    out << to_json(r).dump(2) << "\n";
    return 0;
  }
  const auto& dec = r.decomposition;
  out << "system:\n" << r.system.to_string();
  if (r.system.to_string().back() != '\n') out << "\n";
  print_legend(in.generated, out);
  out << "boundary: " << roots_text(dec.boundary) << "\n";
  if (!dec.pruning.empty()) {
    std::vector<std::string> parts;
    for (const auto& g : dec.pruning) parts.push_back(g.to_string() + " > 0");
    out << "pruning:  " << join(parts, ", ") << "\n";
  }
  std::vector<std::array<std::string, 3>> rows;
  rows.push_back({"cell", "sample", "verdict"});
  for (const auto& cv : r.verdicts)
    rows.push_back({dec.cells[cv.sample.cell].to_string(), point_text(cv.sample.point), verdict_text(cv.verdict)});
  std::size_t w0 = 0, w1 = 0;
  for (const auto& row : rows) {
    w0 = std::max(w0, row[0].size());
    w1 = std::max(w1, row[1].size());
  }
  for (const auto& row : rows)
    out << "  " << std::left << std::setw(static_cast<int>(w0)) << row[0] << "  " << std::setw(static_cast<int>(w1))
        << row[1] << "  " << row[2] << "\n";
  out << r.solution.render();
  return 0;
}

int cmd_builtin(const RunConfig& cfg, std::ostream& out) {
  if (cfg.list) {
    for (const auto& b : builtins()) out << b.name << "  " << b.description << "\n";
    return 0;
  }
  return cmd_solve(cfg, out);
}

int cmd_plot(const RunConfig& cfg, std::ostream& out) {
  const Loaded in = load(cfg);
  const ParametricSystem& sys = in.generated.system;
  if (sys.bound_vars.size() != 1 || sys.equations.size() != 1)
    throw Error(ErrorKind::InvalidArgument, "plot needs exactly one bound variable and one equation", "plot");
  if (cfg.svg_path.empty()) throw InputError("plot needs an output path (-o FILE.svg)");
  std::vector<RealAlgebraicNumber> roots;
  try {
    sys.validate();
    roots = dv_roots(discriminant_variety(sys, cfg.caps, cfg.serial ? Execution::Serial : Execution::Parallel));
  } catch (const Error& e) {
    throw e.with_stage("dv");
  }
  PlotWindow w = default_window(sys, roots);
  if (cfg.window) {
    const auto& v = *cfg.window;
    if (!(v[0] < v[1]) || !(v[2] < v[3])) throw InputError("window must be m_lo m_hi v_lo v_hi with lo < hi");
    w = {v[0], v[1], v[2], v[3]};
  }
  const std::string svg = render_svg(sys, w, roots);
  std::ofstream f(cfg.svg_path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + cfg.svg_path + "'");
  f << svg;
  out << "wrote " << cfg.svg_path << "\n";
  return 0;
}

// Plotting ------------------------------------------------------------------

/// Fast double evaluation of a polynomial in (param, var).
struct Evaluator {
  struct Term {
    double c;
    unsigned ex, ey;
  };
  std::vector<Term> terms;

  Evaluator(const MultiPoly& p, const std::string& x, const std::string& y) {
    const auto& vars = p.vars();
    for (const auto& [e, c] : p.terms()) {
      Term t{c.get_d(), 0, 0};
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == x) t.ex = e[i];
        else if (vars[i] == y) t.ey = e[i];
      }
      terms.push_back(t);
    }
  }
  double operator()(double x, double y) const {
    double s = 0;
    for (const auto& t : terms) s += t.c * std::pow(x, t.ex) * std::pow(y, t.ey);
    return s;
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '<') o += "&lt;";
    else if (c == '>') o += "&gt;";
    else if (c == '&') o += "&amp;";
    else o += c;
  }
  return o;
}

}  // namespace

GroebnerCaps parse_caps(const std::string& text) {
  GroebnerCaps caps;
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::string item;
  while (in >> item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Parse, "caps: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    try {
      std::size_t used = 0;
      if (key == "pairs") {
        caps.max_pair_reductions = std::stoull(value, &used);
      } else if (key == "degree") {
        caps.max_degree = static_cast<std::uint32_t>(std::stoul(value, &used));
      } else if (key == "seconds") {
        caps.time_limit_seconds = std::stod(value, &used);
        if (!(caps.time_limit_seconds > 0)) throw std::invalid_argument("nonpositive");
      } else {
        throw Error(ErrorKind::Parse, "caps: unknown key '" + key + "' (pairs, degree, seconds)");
      }
      if (used != value.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::Parse, "caps: bad value for '" + key + "'");
    }
  }
  return caps;
}

PlotWindow default_window(const ParametricSystem& sys, const std::vector<RealAlgebraicNumber>& boundary) {
  PlotWindow w;
  std::vector<double> xs;
  for (const auto& b : boundary) xs.push_back(b.to_double());
  if (!xs.empty()) {
    w.x0 = *std::min_element(xs.begin(), xs.end()) - 1;
    w.x1 = *std::max_element(xs.begin(), xs.end()) + 1;
  }
  const auto params = sys.parameter_conditions();
  const bool m_positive = std::any_of(params.begin(), params.end(), [](const UniPoly& g) {
    return g.degree() == 1 && g.coeff(0) == 0 && sgn(g.coeff(1)) > 0;
  });
  if (m_positive) w.x0 = std::max(w.x0, 0.0);
  if (w.x1 - w.x0 < 1) w.x1 = w.x0 + 1;

  // Vertical extent: real branches over 33 rational abscissae, preferring
  // feasible ones.
  const std::string& v = sys.bound_vars.at(0);
  std::vector<double> all, feasible;
  for (int k = 0; k <= 32; ++k) {
    const Rational x = Rational(static_cast<long>(std::lround(w.x0 * 1024)), 1024) +
                       Rational(k, 32) * Rational(static_cast<long>(std::lround((w.x1 - w.x0) * 1024)), 1024);
    const MultiPoly fx = sys.equations[0].substitute(sys.parameter, x).compact();
    if (fx.is_zero() || fx.is_constant()) continue;
    for (const auto& r : isolate_roots(fx.to_uni(v))) {
      const double y = r.to_double();
      if (std::abs(y) > 50) continue;
      all.push_back(y);
      bool ok = true;
      for (const auto& g : sys.positives)
        if (g.evaluate(std::map<std::string, double>{{sys.parameter, x.get_d()}, {v, y}}) <= 0) ok = false;
      if (ok) feasible.push_back(y);
    }
  }
  const auto& ys = feasible.empty() ? all : feasible;
  if (!ys.empty()) {
    double lo = *std::min_element(ys.begin(), ys.end()), hi = *std::max_element(ys.begin(), ys.end());
    const double pad = std::max(0.5, 0.15 * (hi - lo));
    w.y0 = lo - pad;
    w.y1 = hi + pad;
  }
  return w;
}

std::string render_svg(const ParametricSystem& sys, const PlotWindow& w,
                       const std::vector<RealAlgebraicNumber>& boundary) {
  constexpr int N = 512, margin = 60;
  const std::string& x_name = sys.parameter;
  const std::string& y_name = sys.bound_vars.at(0);
  const Evaluator f(sys.equations.at(0), x_name, y_name);
  std::vector<Evaluator> conds;
  for (const auto& g : sys.positives) conds.emplace_back(g, x_name, y_name);

  const double dx = (w.x1 - w.x0) / N, dy = (w.y1 - w.y0) / N;
  std::vector<double> val((N + 1) * (N + 1));
  for (int j = 0; j <= N; ++j)
    for (int i = 0; i <= N; ++i) val[j * (N + 1) + i] = f(w.x0 + i * dx, w.y0 + j * dy);

  auto px = [&](double x) { return margin + (x - w.x0) / (w.x1 - w.x0) * N; };
  auto py = [&](double y) { return margin + N - (y - w.y0) / (w.y1 - w.y0) * N; };
  auto feasible = [&](double x, double y) {
    return std::all_of(conds.begin(), conds.end(), [&](const Evaluator& g) { return g(x, y) > 0; });
  };

  std::string heavy, light;
  auto segment = [&](double ax, double ay, double bx, double by) {
    std::string& path = feasible((ax + bx) / 2, (ay + by) / 2) ? heavy : light;
    path += "M" + num(px(ax)) + " " + num(py(ay)) + "L" + num(px(bx)) + " " + num(py(by));
  };

  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) {
      // Corners counterclockwise from bottom-left.
      const double x0 = w.x0 + i * dx, y0 = w.y0 + j * dy;
      const double cx[4] = {x0, x0 + dx, x0 + dx, x0};
      const double cy[4] = {y0, y0, y0 + dy, y0 + dy};
      const double v[4] = {val[j * (N + 1) + i], val[j * (N + 1) + i + 1], val[(j + 1) * (N + 1) + i + 1],
                           val[(j + 1) * (N + 1) + i]};
      std::vector<std::pair<double, double>> hits;  // edge crossings, edge order
      std::vector<int> edges;
      for (int e = 0; e < 4; ++e) {
        const int a = e, b = (e + 1) % 4;
        if ((v[a] >= 0) == (v[b] >= 0)) continue;
        const double t = v[a] / (v[a] - v[b]);
        hits.emplace_back(cx[a] + t * (cx[b] - cx[a]), cy[a] + t * (cy[b] - cy[a]));
        edges.push_back(e);
      }
      if (hits.size() == 2) {
        segment(hits[0].first, hits[0].second, hits[1].first, hits[1].second);
      } else if (hits.size() == 4) {
        // Saddle: the centre's sign decides which corners are joined.
        const bool centre = f(x0 + dx / 2, y0 + dy / 2) >= 0;
        const bool corner0 = v[0] >= 0;
        if (centre == corner0) {
          segment(hits[0].first, hits[0].second, hits[1].first, hits[1].second);
          segment(hits[2].first, hits[2].second, hits[3].first, hits[3].second);
        } else {
          segment(hits[0].first, hits[0].second, hits[3].first, hits[3].second);
          segment(hits[1].first, hits[1].second, hits[2].first, hits[2].second);
        }
      }
    }
  }

  std::ostringstream s;
  const int W = N + 2 * margin;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << W << "\" viewBox=\"0 0 " << W
    << " " << W << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s << "<rect width=\"" << W << "\" height=\"" << W << "\" fill=\"white\"/>\n";
  s << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\">" << xml_escape(sys.equations[0].to_string())
    << " = 0</text>\n";
  s << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << N << "\" height=\"" << N
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  if (w.y0 < 0 && w.y1 > 0)
    s << "<line x1=\"" << margin << "\" y1=\"" << num(py(0)) << "\" x2=\"" << margin + N << "\" y2=\"" << num(py(0))
      << "\" stroke=\"#ccc\"/>\n";
  if (w.x0 < 0 && w.x1 > 0)
    s << "<line x1=\"" << num(px(0)) << "\" y1=\"" << margin << "\" x2=\"" << num(px(0)) << "\" y2=\"" << margin + N
      << "\" stroke=\"#ccc\"/>\n";
  for (const auto& b : boundary) {
    const double x = b.to_double();
    if (x <= w.x0 || x >= w.x1) continue;
    s << "<line class=\"boundary\" x1=\"" << num(px(x)) << "\" y1=\"" << margin << "\" x2=\"" << num(px(x))
      << "\" y2=\"" << margin + N << "\" stroke=\"#4a7ebb\" stroke-dasharray=\"4 3\"/>\n";
    s << "<text x=\"" << num(px(x)) << "\" y=\"" << margin - 6 << "\" text-anchor=\"middle\" fill=\"#4a7ebb\">"
      << xml_escape(display(b)) << "</text>\n";
  }
  if (!light.empty())
    s << "<path class=\"curve\" d=\"" << light << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  if (!heavy.empty())
    s << "<path class=\"feasible\" d=\"" << heavy
      << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n";
  const int bottom = margin + N;
  s << "<text x=\"" << margin << "\" y=\"" << bottom + 18 << "\" text-anchor=\"start\">" << label(w.x0) << "</text>\n";
  s << "<text x=\"" << margin + N << "\" y=\"" << bottom + 18 << "\" text-anchor=\"end\">" << label(w.x1)
    << "</text>\n";
  s << "<text x=\"" << W / 2 << "\" y=\"" << bottom + 36 << "\" text-anchor=\"middle\">" << xml_escape(x_name)
    << "</text>\n";
  s << "<text x=\"" << margin - 6 << "\" y=\"" << bottom << "\" text-anchor=\"end\">" << label(w.y0) << "</text>\n";
  s << "<text x=\"" << margin - 6 << "\" y=\"" << margin + 12 << "\" text-anchor=\"end\">" << label(w.y1)
    << "</text>\n";
  s << "<text x=\"" << margin - 24 << "\" y=\"" << W / 2 << "\" text-anchor=\"middle\">" << xml_escape(y_name)
    << "</text>\n";
  s << "</svg>\n";
  return s.str();
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.subcommand == "solve") return cmd_solve(cfg, out);
    if (cfg.subcommand == "dv") return cmd_dv(cfg, out);
    if (cfg.subcommand == "cells") return cmd_cells(cfg, out);
    if (cfg.subcommand == "builtin") return cmd_builtin(cfg, out);
    if (cfg.subcommand == "plot") return cmd_plot(cfg, out);
    err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
    return 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse && e.stage().empty()) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
    err << "error [" << (e.stage().empty() ? "solve" : e.stage()) << "]: " << to_string(e.kind()) << ": " << e.what()
        << "\n";
    return 2;
  }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parametric root finding: sharp ranges of a parameter m in semialgebraic systems", "prf"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string caps_text;
  std::vector<double> window;
  std::string file;

  auto common = [&](CLI::App* sub, bool with_file) {
    sub->add_flag("--json", cfg.json, "JSON output");
    sub->add_option("--seed", cfg.seed, "Sample seed (0 = midpoints)");
    sub->add_option("--caps", caps_text, "Groebner caps, e.g. pairs=100000,degree=60,seconds=60");
    sub->add_flag("--serial", cfg.serial, "Evaluate samples serially");
    if (with_file) {
      sub->add_option("file", file, "Problem file");
      sub->add_option("--builtin", cfg.builtin, "Named built-in problem instead of a file");
    }
  };
  auto* solve = app.add_subcommand("solve", "Solve a problem and print the parameter range");
  common(solve, true);
  auto* dv = app.add_subcommand("dv", "Print the discriminant variety families and their real roots");
  common(dv, true);
  auto* cells = app.add_subcommand("cells", "Print the cell decomposition, samples and per-cell verdicts");
  common(cells, true);
  auto* bi = app.add_subcommand("builtin", "Solve a named built-in problem");
  common(bi, false);
  bi->add_option("name", cfg.builtin, "Built-in problem name");
  bi->add_flag("--list", cfg.list, "List built-in problems");
  auto* plot = app.add_subcommand("plot", "Render the curve f(m, v) = 0 as SVG");
  common(plot, true);
  plot->add_option("-o,--output", cfg.svg_path, "SVG output path")->required();
  plot->add_option("--window", window, "m_lo m_hi v_lo v_hi")->expected(4)->delimiter(',');

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  for (auto* sub : {solve, dv, cells, bi, plot})
    if (sub->parsed()) cfg.subcommand = sub->get_name();
  if (!file.empty()) cfg.path = file;
  if (!window.empty()) cfg.window = std::array<double, 4>{window[0], window[1], window[2], window[3]};
  if (cfg.subcommand == "builtin" && !cfg.list && !cfg.builtin) {
    err << "error: builtin needs a NAME or --list\n";
    return 1;
  }
  if (!caps_text.empty()) {
    try {
      cfg.caps = parse_caps(caps_text);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return run(cfg, out, err);
}

}  // namespace prf::cli
