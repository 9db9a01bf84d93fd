#include "prf/explore.hpp"

#include "prf/error.hpp"
#include "prf/factor.hpp"
#include "prf/parse.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace prf {

namespace {

const char* kNegInf = "-inf";
const char* kPosInf = "+inf";

/// Rational bounds a < b with a ≥ x and b ≤ y, for x < y.
std::pair<Rational, Rational> separated(RealAlgebraicNumber x, RealAlgebraicNumber y) {
  while (!(x.upper_bound() < y.lower_bound())) {
    x = x.bisected();
    y = y.bisected();
  }
  return {x.upper_bound(), y.lower_bound()};
}

/// Canonical rational inside an open cell.
Rational interior(const Cell& c) {
  if (c.lo && c.hi) {
    auto [a, b] = separated(*c.lo, *c.hi);
    return (a + b) / 2;
  }
  if (c.hi) return c.hi->lower_bound() - 1;
  if (c.lo) return c.lo->upper_bound() + 1;
  return Rational(0);
}

Rational jittered(const Cell& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + c.index);
  std::uniform_int_distribution<int> pick(1, 1023);
  const Rational t(pick(rng), 1024);
  if (c.lo && c.hi) {
    auto [a, b] = separated(*c.lo, *c.hi);
    return a + (b - a) * t;
  }
  if (c.hi) return c.hi->lower_bound() - 4 * t;
  if (c.lo) return c.lo->upper_bound() + 4 * t;
  return 8 * t - 4;
}

bool conditions_hold(const std::vector<UniPoly>& conds, const CellPoint& x) {
  for (const auto& g : conds)
    if (sign_at(g, x) <= 0) return false;
  return true;
}

/// Irreducible factors of every polynomial, deduplicated; square-free parts
/// when factoring fails.
std::vector<UniPoly> boundary_polys(const std::vector<UniPoly>& polys) {
  std::map<std::string, UniPoly> uniq;
  for (const auto& p : polys) {
    if (p.degree() < 1) continue;
    std::vector<UniPoly> fs;
    try {
      fs = factor_square_free(p);
    } catch (const Error&) {
      fs = {square_free_part(p).primitive()};
    }
    for (auto& f : fs) uniq.emplace(f.to_string(), std::move(f));
  }
  std::vector<UniPoly> out;
  for (auto& [_, f] : uniq) out.push_back(std::move(f));
  return out;
}

std::string condition_text(const UniPoly& g) { return g.to_string() + " > 0"; }

std::string ran_text(const RealAlgebraicNumber& a) { return display(a); }

}  // namespace

std::string Cell::to_string() const {
  if (is_point()) return "{" + ran_text(point()) + "}";
  return "(" + (lo ? ran_text(*lo) : std::string(kNegInf)) + ", " + (hi ? ran_text(*hi) : std::string(kPosInf)) + ")";
}

CellDecomposition decompose(const DiscriminantVariety& dv, const ParametricSystem& sys) {
  if (dv.combined.is_zero())
    throw Error(ErrorKind::ZeroPolynomial, "combined discriminant variety polynomial is zero");
  CellDecomposition dec;
  dec.parameter = sys.parameter;
  dec.pruning = sys.parameter_conditions();

  std::vector<UniPoly> polys;
  for (const auto* fam : {&dv.crit, &dv.in, &dv.inf})
    for (const auto& p : *fam) polys.push_back(p.renamed(sys.parameter));
  // condition roots are boundaries too, so condition signs are constant on cells
  for (const auto& g : dec.pruning) polys.push_back(g);

  std::vector<RealAlgebraicNumber> roots;
  for (const auto& f : boundary_polys(polys)) {
    auto rs = isolate_roots(f);
    roots.insert(roots.end(), rs.begin(), rs.end());
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a < b; });
  for (auto& r : roots)
    if (dec.boundary.empty() || !(dec.boundary.back() == r)) dec.boundary.push_back(std::move(r));

  const std::size_t k = dec.boundary.size();
  for (std::size_t i = 0; i <= k; ++i) {
    Cell open;
    open.kind = Cell::Kind::Open;
    if (i > 0) open.lo = dec.boundary[i - 1];
    if (i < k) open.hi = dec.boundary[i];
    open.index = 2 * i;
    if (conditions_hold(dec.pruning, CellPoint(interior(open)))) dec.cells.push_back(open);
    if (i < k) {
      Cell pt;
      pt.kind = Cell::Kind::Point;
      pt.lo = pt.hi = dec.boundary[i];
      pt.index = 2 * i + 1;
      if (conditions_hold(dec.pruning, pt.point())) dec.cells.push_back(pt);
    }
  }
  return dec;
}

std::vector<Sample> sample_plan(const CellDecomposition& dec, std::uint64_t seed) {
  std::vector<Sample> plan;
  plan.reserve(dec.cells.size());
  for (std::size_t i = 0; i < dec.cells.size(); ++i) {
    const Cell& c = dec.cells[i];
    if (c.is_point()) {
      plan.push_back({i, c.point()});
      continue;
    }
    CellPoint x(seed == 0 ? interior(c) : jittered(c, seed));
    if ((c.lo && !(*c.lo < x)) || (c.hi && !(x < *c.hi)))
      throw Error(ErrorKind::InvalidArgument, "sample escaped its cell " + c.to_string());
    plan.push_back({i, std::move(x)});
  }
  return plan;
}

// Pieces ---------------------------------------------------------------------

bool Piece::is_point() const { return lo && hi && lo->closed && hi->closed && lo->value == hi->value; }

bool Piece::contains(const Rational& x) const {
  const CellPoint v(x);
  if (lo) {
    auto c = compare(v, lo->value);
    if (c < 0 || (c == 0 && !lo->closed)) return false;
  }
  if (hi) {
    auto c = compare(v, hi->value);
    if (c > 0 || (c == 0 && !hi->closed)) return false;
  }
  return true;
}

std::string Piece::to_string(const std::string& param) const {
  if (is_point()) return param + " = " + ran_text(lo->value);
  if (lo && hi)
    return ran_text(lo->value) + (lo->closed ? " <= " : " < ") + param + (hi->closed ? " <= " : " < ") +
           ran_text(hi->value);
  if (lo) return param + (lo->closed ? " >= " : " > ") + ran_text(lo->value);
  if (hi) return param + (hi->closed ? " <= " : " < ") + ran_text(hi->value);
  return "true";
}

bool operator==(const Piece& a, const Piece& b) {
  auto same = [](const std::optional<Endpoint>& x, const std::optional<Endpoint>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || (x->closed == y->closed && x->value == y->value);
  };
  return same(a.lo, b.lo) && same(a.hi, b.hi);
}

bool operator==(const SolutionSet& a, const SolutionSet& b) {
  return a.parameter == b.parameter && a.pieces == b.pieces && a.assumptions == b.assumptions;
}

bool SolutionSet::contains(const Rational& x) const {
  return std::any_of(pieces.begin(), pieces.end(), [&](const Piece& p) { return p.contains(x); });
}

std::string SolutionSet::formula() const {
  if (pieces.empty()) return "false";
  std::string s;
  for (std::size_t i = 0; i < pieces.size(); ++i) s += (i ? " or " : "") + pieces[i].to_string(parameter);
  return s;
}

std::string SolutionSet::render() const {
  std::string s;
  for (const auto& a : assumptions) s += "# assuming " + a + "\n";
  return s + formula() + "\n";
}

SolutionSet merge(const CellDecomposition& dec, const std::vector<bool>& truth) {
  if (truth.size() != dec.cells.size()) throw Error(ErrorKind::InvalidArgument, "one truth value per cell expected");
  SolutionSet out;
  out.parameter = dec.parameter;
  for (const auto& g : dec.pruning) out.assumptions.push_back(condition_text(g));

  std::optional<std::size_t> last;  // index of the previous true cell, if it continues the piece
  for (std::size_t i = 0; i < dec.cells.size(); ++i) {
    const Cell& c = dec.cells[i];
    if (!truth[i]) {
      last.reset();
      continue;
    }
    const bool extends = last && dec.cells[*last].index + 1 == c.index;
    if (!extends) {
      Piece p;
      if (c.is_point()) p.lo = Endpoint{c.point(), true};
      else if (c.lo) p.lo = Endpoint{*c.lo, false};
      out.pieces.push_back(std::move(p));
    }
    Piece& p = out.pieces.back();
    if (c.is_point()) p.hi = Endpoint{c.point(), true};
    else if (c.hi) p.hi = Endpoint{*c.hi, false};
    else p.hi.reset();
    last = i;
  }
  return out;
}

// Solving ----------------------------------------------------------------------

std::vector<SatVerdict> evaluate_samples(const ParametricSystem& sys, const std::vector<Sample>& plan,
                                         const SolveOptions& opts) {
  ZdOptions zo;
  zo.caps = opts.caps;
  zo.seed = opts.seed;
  std::vector<SatVerdict> out(plan.size());
  if (opts.exec == Execution::Serial) {
    for (std::size_t i = 0; i < plan.size(); ++i) out[i] = sat_at(sys, plan[i].point, zo);
    return out;
  }
  ExceptionSlot slot;
  const long n = static_cast<long>(plan.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) slot.run([&] { out[i] = sat_at(sys, plan[i].point, zo); });
  slot.rethrow();
  return out;
}

SolveReport solve_with_dv(const ParametricSystem& sys, const DiscriminantVariety& dv, const SolveOptions& opts) {
  SolveReport r;
  r.system = sys;
  r.dv = dv;
  std::vector<Sample> plan;
  try {
    r.decomposition = decompose(dv, sys);
    plan = sample_plan(r.decomposition, opts.seed);
  } catch (const Error& e) {
    throw e.with_stage("explore");
  }
  std::vector<SatVerdict> vs;
  try {
    vs = evaluate_samples(sys, plan, opts);
  } catch (const Error& e) {
    throw e.with_stage("zdsat");
  }
  std::vector<bool> truth(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    truth[i] = vs[i].sat();
    r.verdicts.push_back({plan[i], vs[i]});
  }
  r.solution = merge(r.decomposition, truth);
  return r;
}

SolveReport solve_report(const ParametricSystem& sys, const SolveOptions& opts) {
  DiscriminantVariety dv;
  try {
    sys.validate();
    sys.require_square();
    dv = discriminant_variety(sys, opts.caps, opts.exec);
  } catch (const Error& e) {
    throw e.with_stage("dv");
  }
  return solve_with_dv(sys, dv, opts);
}

SolutionSet solve(const ParametricSystem& sys, const SolveOptions& opts) { return solve_report(sys, opts).solution; }

// JSON -------------------------------------------------------------------------

using nlohmann::json;

json to_json(const RealAlgebraicNumber& a) {
  return json{{"polynomial", a.defining().to_string()},
              {"root_index", a.root_index()},
              {"decimal", a.to_decimal(12)},
              {"display", display(a)}};
}

RealAlgebraicNumber ran_from_json(const json& j, const std::string& param) {
  const MultiPoly p = parse_poly(j.at("polynomial").get<std::string>());
  for (const auto& v : p.support())
    if (v != param) throw Error(ErrorKind::InvalidArgument, "endpoint polynomial mentions " + v);
  return RealAlgebraicNumber::root_of(p.to_uni(param), j.at("root_index").get<int>());
}

namespace {

json endpoint_json(const std::optional<Endpoint>& e) {
  if (!e) return nullptr;
  json j = to_json(e->value);
  j["closed"] = e->closed;
  return j;
}

std::optional<Endpoint> endpoint_from_json(const json& j, const std::string& param) {
  if (j.is_null()) return std::nullopt;
  return Endpoint{ran_from_json(j, param), j.at("closed").get<bool>()};
}

json bound_json(const std::optional<CellPoint>& p) { return p ? to_json(*p) : json(nullptr); }

}  // namespace

json to_json(const SolutionSet& s) {
  json pieces = json::array();
  for (const auto& p : s.pieces) pieces.push_back({{"lower", endpoint_json(p.lo)}, {"upper", endpoint_json(p.hi)}});
  return json{{"parameter", s.parameter}, {"assumptions", s.assumptions}, {"formula", s.formula()}, {"pieces", pieces}};
}

SolutionSet solution_from_json(const json& j) {
  SolutionSet s;
  s.parameter = j.at("parameter").get<std::string>();
  s.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  for (const auto& p : j.at("pieces"))
    s.pieces.push_back({endpoint_from_json(p.at("lower"), s.parameter), endpoint_from_json(p.at("upper"), s.parameter)});
  return s;
}

json to_json(const SatVerdict& v) {
  json j{{"status", v.sat() ? "sat" : "unsat"}, {"count", v.count}};
  if (v.witness) {
    json box = json::array();
    for (const auto& w : *v.witness) box.push_back({{"var", w.var}, {"lo", to_string(w.lo)}, {"hi", to_string(w.hi)}});
    j["witness"] = box;
  }
  return j;
}

json dv_to_json(const DiscriminantVariety& dv) {
  auto family = [](const std::vector<UniPoly>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(p.to_string());
    return a;
  };
  return json{{"crit", family(dv.crit)},
              {"in", family(dv.in)},
              {"inf", family(dv.inf)},
              {"combined", dv.combined.to_string()}};
}

json to_json(const SolveReport& r) {
  json boundary = json::array();
  for (const auto& b : r.decomposition.boundary) boundary.push_back(to_json(b));
  json cells = json::array();
  for (const auto& cv : r.verdicts) {
    const Cell& c = r.decomposition.cells[cv.sample.cell];
    json j{{"cell", c.to_string()},
           {"kind", c.is_point() ? "point" : "open"},
           {"lower", bound_json(c.lo)},
           {"upper", bound_json(c.hi)},
           {"sample", to_json(cv.sample.point)}};
    j["verdict"] = to_json(cv.verdict);
    cells.push_back(std::move(j));
  }
  return json{{"solution", to_json(r.solution)}, {"dv", dv_to_json(r.dv)}, {"boundary", boundary}, {"cells", cells}};
}

}  // namespace prf
