#include "prf/dv.hpp"

#include "prf/error.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace prf {

std::vector<std::string> ParametricSystem::universe() const {
  auto u = bound_vars;
  u.push_back(parameter);
  return u;
}

void ParametricSystem::validate() const {
  if (parameter.empty()) throw Error(ErrorKind::InvalidArgument, "no parameter declared");
  if (std::find(bound_vars.begin(), bound_vars.end(), parameter) != bound_vars.end())
    throw Error(ErrorKind::InvalidArgument, "parameter '" + parameter + "' is also a bound variable");
  for (std::size_t i = 0; i < bound_vars.size(); ++i)
    for (std::size_t j = i + 1; j < bound_vars.size(); ++j)
      if (bound_vars[i] == bound_vars[j])
        throw Error(ErrorKind::InvalidArgument, "bound variable '" + bound_vars[i] + "' listed twice");
  if (equations.empty()) throw Error(ErrorKind::InvalidArgument, "no equations");
  const auto u = universe();
  auto check = [&](const MultiPoly& p, const char* what) {
    for (const auto& v : p.support())
      if (std::find(u.begin(), u.end(), v) == u.end())
        throw Error(ErrorKind::InvalidArgument,
                    std::string(what) + " '" + p.to_string() + "' uses undeclared variable '" + v + "'");
  };
  for (const auto& e : equations) {
    if (e.is_zero()) throw Error(ErrorKind::InvalidArgument, "equation is identically zero");
    check(e, "equation");
  }
  for (const auto& g : positives) check(g, "condition");
}

void ParametricSystem::require_square() const {
  if (!is_square())
    throw Error(ErrorKind::NonSquareSystem,
                "the method needs finitely many solutions for generic parameter values: " +
                    std::to_string(equations.size()) + " equations in " + std::to_string(bound_vars.size()) +
                    " bound variables");
}

std::vector<UniPoly> ParametricSystem::parameter_conditions() const {
  std::vector<UniPoly> out;
  for (const auto& g : positives) {
    auto s = g.support();
    if (s.size() == 1 && s.front() == parameter) out.push_back(g.to_uni(parameter));
  }
  return out;
}

std::vector<MultiPoly> ParametricSystem::bound_conditions() const {
  std::vector<MultiPoly> out;
  for (const auto& g : positives) {
    auto s = g.support();
    if (!(s.size() == 1 && s.front() == parameter)) out.push_back(g);
  }
  return out;
}

std::string ParametricSystem::to_string() const {
  std::ostringstream os;
  os << "param: " << parameter << "\nvars:";
  for (std::size_t i = 0; i < bound_vars.size(); ++i) os << (i ? ", " : " ") << bound_vars[i];
  os << "\n";
  for (const auto& e : equations) os << "eq: " << e.to_string() << "\n";
  for (const auto& g : positives) os << "pos: " << g.to_string() << "\n";
  return os.str();
}

namespace {

/// Square-free primitive non-constant members, deduplicated, in input order.
void add_member(std::vector<UniPoly>& out, const UniPoly& p) {
  if (p.is_zero() || p.degree() < 1) return;
  UniPoly q = square_free_part(p).primitive();
  if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
}

MultiPoly product_of_conditions(const ParametricSystem& sys) {
  MultiPoly h = MultiPoly::constant(1);
  for (const auto& g : sys.positives)
    if (!g.is_constant()) h *= g;
  return h;
}

}  // namespace

std::vector<UniPoly> o_crit(const ParametricSystem& sys, const GroebnerCaps& caps) {
  sys.validate();
  sys.require_square();
  std::vector<MultiPoly> gens = sys.equations;
  gens.push_back(partial_jacobian_det(sys.equations, sys.bound_vars));
  std::vector<std::string> universe = sys.bound_vars;
  MultiPoly h = product_of_conditions(sys);
  if (!h.is_constant()) {
    const std::string t = fresh_variable("t", sys.universe());
    gens.push_back(MultiPoly::variable(t) * h - MultiPoly::constant(1));
    universe.push_back(t);
  }
  universe.push_back(sys.parameter);
  auto elim = elimination_ideal(Ideal(gens, universe), {sys.parameter}, caps);
  std::vector<UniPoly> out;
  for (const auto& p : elim) add_member(out, p.to_uni(sys.parameter));
  return out;
}

namespace {

/// The printed recipe: eliminate down to {parameter, u} from
/// ⟨eqs, ∏g − u, u·t − 1⟩ and read off the fibre over u = 0.
std::vector<UniPoly> o_in_u_trick(const ParametricSystem& sys, const MultiPoly& h, const GroebnerCaps& caps) {
  const std::string u = fresh_variable("u", sys.universe());
  auto taken = sys.universe();
  taken.push_back(u);
  const std::string t = fresh_variable("t", taken);
  std::vector<MultiPoly> gens = sys.equations;
  gens.push_back(h - MultiPoly::variable(u));
  gens.push_back(MultiPoly::variable(u) * MultiPoly::variable(t) - MultiPoly::constant(1));
  std::vector<std::string> universe = sys.bound_vars;
  universe.push_back(t);
  universe.push_back(sys.parameter);
  universe.push_back(u);
  auto elim = elimination_ideal(Ideal(gens, universe), {sys.parameter, u}, caps);
  // the fibre over u = 0 is the common zero set of the specialised generators
  UniPoly common(sys.parameter);
  for (const auto& p : specialize_to_zero(elim, u)) common = gcd(common, p.to_uni(sys.parameter));
  std::vector<UniPoly> out;
  if (!common.is_zero()) add_member(out, common);
  return out;
}

}  // namespace

std::vector<UniPoly> o_in(const ParametricSystem& sys, const GroebnerCaps& caps) {
  sys.validate();
  sys.require_square();
  MultiPoly h = product_of_conditions(sys);
  if (h.is_constant()) return {};
  // Same fibre, computed piecewise: drop the components of the solution set
  // inside h = 0 (the role of u·t − 1), then project {g = 0} for each
  // condition g. These ideals are zero-dimensional in practice, which turns
  // each projection into a minimal polynomial; limits at infinity are the
  // business of o_inf.
  auto universe = sys.universe();
  Ideal sat = saturate(Ideal(sys.equations, universe), h, caps);
  std::vector<UniPoly> out;
  for (const auto& g : sys.positives) {
    if (g.is_constant()) continue;
    std::vector<MultiPoly> gens = sat.generators;
    gens.push_back(g);
    GroebnerBasis gb = buchberger(Ideal(gens, universe), MonomialOrder::grevlex(universe), caps);
    if (gb.is_unit()) continue;
    if (!gb.is_zero_dimensional()) return o_in_u_trick(sys, h, caps);
    add_member(out, UniPoly(sys.parameter, gb.minimal_polynomial(MultiPoly::variable(sys.parameter))));
  }
  return out;
}

namespace {

/// Leading coefficients (in the parameter) of the pure-power elements of a
/// block-order basis; nullopt if some bound variable has none.
std::optional<std::vector<UniPoly>> leading_coefficients(const ParametricSystem& sys,
                                                         const std::vector<MultiPoly>& gens,
                                                         const GroebnerCaps& caps, std::string* missing) {
  std::vector<std::string> universe = sys.universe();
  auto order = MonomialOrder::block(sys.bound_vars, {sys.parameter});
  GroebnerBasis gb = buchberger(Ideal(gens, universe), order, caps);
  if (gb.is_unit()) return std::vector<UniPoly>{};
  const std::size_t nb = sys.bound_vars.size();
  std::vector<UniPoly> out;
  for (std::size_t v = 0; v < nb; ++v) {
    bool found = false;
    for (std::size_t i = 0; i < gb.basis().size(); ++i) {
      Exponents lm = gb.leading_monomial(i);
      bool pure = lm[v] > 0;
      for (std::size_t k = 0; k < nb && pure; ++k)
        if (k != v && lm[k] != 0) pure = false;
      if (!pure) continue;
      found = true;
      // coefficient (a polynomial in the parameter) of the bound part of lm
      const MultiPoly gu = gb.basis()[i].with_vars(universe);
      std::vector<Rational> coeffs;
      for (const auto& [e, c] : gu.terms()) {
        bool same = true;
        for (std::size_t k = 0; k < nb; ++k)
          if (e[k] != lm[k]) same = false;
        if (!same) continue;
        const std::size_t d = e[nb];
        if (coeffs.size() <= d) coeffs.resize(d + 1);
        coeffs[d] += c;
      }
      add_member(out, UniPoly(sys.parameter, std::move(coeffs)));
    }
    if (!found) {
      *missing = sys.bound_vars[v];
      return std::nullopt;
    }
  }
  return out;
}

}  // namespace

std::vector<UniPoly> o_inf(const ParametricSystem& sys, const GroebnerCaps& caps) {
  sys.validate();
  sys.require_square();
  std::string missing;
  if (auto r = leading_coefficients(sys, sys.equations, caps, &missing)) return *r;
  // Degenerate components lying inside some g = 0 can make every fibre
  // infinite without touching the feasible part; retry without them.
  MultiPoly h = product_of_conditions(sys);
  if (!h.is_constant()) {
    Ideal sat = saturate(Ideal(sys.equations, sys.universe()), h, caps);
    if (auto r = leading_coefficients(sys, sat.generators, caps, &missing)) return *r;
  }
  throw Error(ErrorKind::NotZeroDimensionalFiber,
              "no basis element has a pure power of '" + missing +
                  "' as leading monomial: fibres are infinite for generic parameter values");
}

DiscriminantVariety discriminant_variety(const ParametricSystem& sys, const GroebnerCaps& caps, Execution exec) {
  sys.validate();
  sys.require_square();
  DiscriminantVariety dv;
  if (exec == Execution::Parallel) {
    ExceptionSlot slot;
#pragma omp parallel sections
    {
#pragma omp section
      slot.run([&] { dv.crit = o_crit(sys, caps); });
#pragma omp section
      slot.run([&] { dv.in = o_in(sys, caps); });
#pragma omp section
      slot.run([&] { dv.inf = o_inf(sys, caps); });
    }
    slot.rethrow();
  } else {
    dv.crit = o_crit(sys, caps);
    dv.in = o_in(sys, caps);
    dv.inf = o_inf(sys, caps);
  }
  UniPoly product(sys.parameter, {Rational(1)});
  for (const auto* family : {&dv.crit, &dv.in, &dv.inf})
    for (const auto& p : *family) product *= p;
  dv.combined = square_free_part(product).primitive();
  return dv;
}

}  // namespace prf
