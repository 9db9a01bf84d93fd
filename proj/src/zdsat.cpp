#include "prf/zdsat.hpp"

#include "prf/error.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace prf {

namespace {

constexpr std::size_t kMaxQuotientDim = 4096;

/// Q[vars]/I for a zero-dimensional I, with coordinates in the basis of
/// standard monomials of a grevlex Gröbner basis.
class Quotient {
 public:
  Quotient(const std::vector<MultiPoly>& gens, const std::vector<std::string>& vars, const GroebnerCaps& caps)
      : vars_(vars), gb_(buchberger(Ideal(gens, vars), MonomialOrder::grevlex(vars), caps)) {
    if (gb_.is_unit()) return;
    if (!gb_.is_zero_dimensional())
      throw Error(ErrorKind::NotZeroDimensional, "the specialised system has infinitely many complex solutions");
    std::vector<Exponents> leads;
    for (std::size_t i = 0; i < gb_.basis().size(); ++i) leads.push_back(gb_.leading_monomial(i));
    auto standard = [&](const Exponents& e) {
      for (const auto& l : leads) {
        bool div = true;
        for (std::size_t k = 0; k < e.size() && div; ++k)
          if (l[k] > e[k]) div = false;
        if (div) return false;
      }
      return true;
    };
    std::vector<Exponents> todo{Exponents(vars_.size(), 0)};
    std::set<Exponents> seen(todo.begin(), todo.end());
    while (!todo.empty()) {
      Exponents e = std::move(todo.back());
      todo.pop_back();
      if (!standard(e)) continue;
      basis_.push_back(e);
      if (basis_.size() > kMaxQuotientDim)
        throw Error(ErrorKind::ResourceBudgetExceeded,
                    "more than " + std::to_string(kMaxQuotientDim) + " complex solutions");
      for (std::size_t k = 0; k < e.size(); ++k) {
        Exponents f = e;
        ++f[k];
        if (seen.insert(f).second) todo.push_back(std::move(f));
      }
    }
    std::sort(basis_.begin(), basis_.end());
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  }

  bool empty() const { return gb_.is_unit(); }
  std::size_t dim() const { return basis_.size(); }
  const GroebnerBasis& gb() const { return gb_; }

  MultiPoly nf(const MultiPoly& p) const { return gb_.normal_form(p.with_vars(vars_)); }

  std::vector<Rational> coords_of_nf(const MultiPoly& r) const {
    std::vector<Rational> v(basis_.size());
    const MultiPoly rv = r.with_vars(vars_);
    for (const auto& [e, c] : rv.terms()) v[index_.at(e)] = c;
    return v;
  }
  std::vector<Rational> coords(const MultiPoly& p) const { return coords_of_nf(nf(p)); }

 private:
  std::vector<std::string> vars_;
  GroebnerBasis gb_;
  std::vector<Exponents> basis_;
  std::map<Exponents, std::size_t> index_;
};

/// Solves A·X = B for square A given by columns; nullopt if A is singular.
std::optional<std::vector<std::vector<Rational>>> solve_columns(const std::vector<std::vector<Rational>>& a_cols,
                                                                const std::vector<std::vector<Rational>>& b_cols) {
  const std::size_t n = a_cols.size();
  const std::size_t r = b_cols.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + r));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m[i][j] = a_cols[j][i];
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < n; ++i) m[i][n + j] = b_cols[j][i];
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    Rational inv = Rational(1) / m[col][col];
    for (std::size_t k = col; k < n + r; ++k) m[col][k] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t k = col; k < n + r; ++k)
        if (m[col][k] != 0) m[i][k] -= f * m[col][k];
    }
  }
  std::vector<std::vector<Rational>> x(r, std::vector<Rational>(n));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < n; ++i) x[j][i] = m[i][n + j];
  return x;
}

Interval imul(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval ipow(const Interval& a, unsigned e) {
  Interval r{1, 1};
  for (unsigned k = 0; k < e; ++k) r = imul(r, a);
  if (e % 2 == 0 && a.lo < 0 && a.hi > 0) r.lo = 0;
  return r;
}

Interval horner(const UniPoly& p, const Rational& lo, const Rational& hi) {
  Interval acc{0, 0};
  const Interval x{lo, hi};
  for (int k = p.degree(); k >= 0; --k) {
    acc = imul(acc, x);
    acc.lo += p.coeff(k);
    acc.hi += p.coeff(k);
  }
  return acc;
}

/// Shape-position data: solutions ↔ roots of `eliminant`, coordinates and
/// conditions as polynomials in the primitive element.
struct Shape {
  UniPoly eliminant;
  std::vector<UniPoly> coordinates;
  std::vector<UniPoly> conditions;
};

std::optional<Shape> try_linear_form(const Quotient& q, const MultiPoly& form, const std::vector<std::string>& vars,
                                     const std::vector<MultiPoly>& conditions) {
  const std::size_t d = q.dim();
  std::vector<std::vector<Rational>> krylov;
  MultiPoly power = q.nf(MultiPoly::constant(1));
  const MultiPoly f = q.nf(form);
  for (std::size_t k = 0; k <= d; ++k) {
    krylov.push_back(q.coords_of_nf(power));
    if (k < d) power = q.nf(power * f);
  }
  std::vector<std::vector<Rational>> rhs{krylov.back()};
  krylov.pop_back();
  for (const auto& v : vars) rhs.push_back(q.coords(MultiPoly::variable(v)));
  for (const auto& g : conditions) rhs.push_back(q.coords(g));
  auto sol = solve_columns(krylov, rhs);
  if (!sol) return std::nullopt;
  Shape s;
  std::vector<Rational> elim(d + 1);
  for (std::size_t k = 0; k < d; ++k) elim[k] = -(*sol)[0][k];
  elim[d] = 1;
  s.eliminant = UniPoly("w", std::move(elim));
  for (std::size_t i = 0; i < vars.size(); ++i) s.coordinates.emplace_back("w", (*sol)[1 + i]);
  for (std::size_t j = 0; j < conditions.size(); ++j) s.conditions.emplace_back("w", (*sol)[1 + vars.size() + j]);
  return s;
}

std::vector<WitnessInterval> witness_box(const Shape& s, const RealAlgebraicNumber& root,
                                         const std::vector<std::string>& vars, const std::vector<MultiPoly>& positives) {
  RealAlgebraicNumber th = root;
  const Rational tol(1, 1 << 20);
  std::vector<WitnessInterval> box;
  for (int iter = 0; iter < 80; ++iter) {
    box.clear();
    bool narrow = true;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      Interval iv = horner(s.coordinates[i], th.lower_bound(), th.upper_bound());
      if (iv.hi - iv.lo > tol) narrow = false;
      box.push_back({vars[i], iv.lo, iv.hi});
    }
    bool proven = true;
    for (const auto& g : positives)
      if (!(interval_eval(g, box).lo > 0)) proven = false;
    if ((narrow && proven) || th.is_rational()) break;
    Rational width = th.upper_bound() - th.lower_bound();
    th = th.refined(width / 16);
  }
  return box;
}

}  // namespace

Interval interval_eval(const MultiPoly& p, const std::vector<WitnessInterval>& box) {
  std::map<std::string, Interval> at;
  for (const auto& w : box) at[w.var] = {w.lo, w.hi};
  Interval sum{0, 0};
  for (const auto& [e, c] : p.terms()) {
    Interval t{c, c};
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      auto it = at.find(p.vars()[k]);
      if (it == at.end()) throw Error(ErrorKind::InvalidArgument, "no interval for '" + p.vars()[k] + "'");
      t = imul(t, ipow(it->second, e[k]));
    }
    sum.lo += t.lo;
    sum.hi += t.hi;
  }
  return sum;
}

SpecializedSystem specialize(const ParametricSystem& sys, const Rational& m0) {
  SpecializedSystem s;
  s.vars = sys.bound_vars;
  s.parameter_value = m0;
  for (const auto& e : sys.equations) {
    MultiPoly r = e.substitute(sys.parameter, m0).compact();
    if (!r.is_zero()) s.equations.push_back(std::move(r));
  }
  for (const auto& g : sys.positives) s.positives.push_back(g.substitute(sys.parameter, m0).compact());
  return s;
}

SatVerdict solve_zero_dimensional(const std::vector<std::string>& vars, const std::vector<MultiPoly>& equations,
                                  const std::vector<MultiPoly>& positives, const ZdOptions& opts) {
  SatVerdict unsat;
  std::vector<MultiPoly> conditions;
  MultiPoly h = MultiPoly::constant(1);
  for (const auto& g : positives) {
    if (g.is_constant()) {
      if (g.constant_term() <= 0) return unsat;
      continue;
    }
    conditions.push_back(g);
    h *= g.primitive();
  }
  if (equations.empty())
    throw Error(ErrorKind::NotZeroDimensional, "no equations left after specialisation");

  // Components inside a condition's zero set hold no solution; if they make
  // the variety infinite, t·h = 1 removes them.
  std::vector<MultiPoly> gens = equations;
  std::vector<std::string> ring = vars;
  std::unique_ptr<Quotient> q;
  try {
    q = std::make_unique<Quotient>(gens, ring, opts.caps);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotZeroDimensional || h.is_constant()) throw;
    const std::string t = fresh_variable("t", vars);
    gens.push_back(MultiPoly::variable(t) * h - MultiPoly::constant(1));
    ring.push_back(t);
    q = std::make_unique<Quotient>(gens, ring, opts.caps);
  }
  if (q->empty()) return unsat;

  // Seidenberg: adjoining the square-free parts of the minimal polynomials
  // of all variables yields the radical; rebuilding as soon as one shrinks
  // keeps the later minimal polynomials cheap
  for (auto it = ring.rbegin(); it != ring.rend(); ++it) {
    UniPoly mu(*it, q->gb().minimal_polynomial(MultiPoly::variable(*it)));
    UniPoly sf = square_free_part(mu);
    if (sf.degree() < mu.degree()) {
      gens.push_back(sf.to_multi());
      q = std::make_unique<Quotient>(gens, ring, opts.caps);
    }
  }

  // sparse forms keep the Krylov vectors small; a form separates iff its
  // minimal polynomial has full degree
  std::vector<MultiPoly> forms;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) forms.push_back(MultiPoly::variable(*it));
  for (std::size_t i = vars.size(); i-- > 0;)
    for (std::size_t j = i; j-- > 0;) {
      forms.push_back(MultiPoly::variable(vars[i]) + MultiPoly::variable(vars[j]));
      forms.push_back(MultiPoly::variable(vars[i]) - MultiPoly::variable(vars[j]));
    }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> coef(1, 9), flip(0, 1);
  for (int k = 0; k < opts.max_retries; ++k) {
    MultiPoly form = MultiPoly::constant(0);
    for (const auto& v : vars) form += MultiPoly::variable(v) * Rational(flip(rng) ? coef(rng) : -coef(rng));
    forms.push_back(std::move(form));
  }
  std::optional<Shape> shape;
  for (const auto& form : forms) {
    if (q->gb().minimal_polynomial(form.with_vars(ring)).size() != q->dim() + 1) continue;
    shape = try_linear_form(*q, form, ring, conditions);
    if (shape) break;
  }
  if (!shape)
    throw Error(ErrorKind::ResourceBudgetExceeded,
                "no separating linear form found after " + std::to_string(opts.max_retries) + " random retries");

  SatVerdict out;
  auto roots = isolate_roots(shape->eliminant);
  for (const auto& root : roots) {
    bool ok = true;
    for (const auto& c : shape->conditions)
      if (sign_at(c, root) <= 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if (out.count++ == 0) {
      Shape visible{shape->eliminant, {shape->coordinates.begin(), shape->coordinates.begin() + vars.size()}, {}};
      out.witness = witness_box(visible, root, vars, conditions);
    }
  }
  if (out.count > 0) out.status = SatVerdict::Status::Sat;
  return out;
}

SatVerdict sat_at_rational(const ParametricSystem& sys, const Rational& m0, const ZdOptions& opts) {
  sys.validate();
  sys.require_square();
  for (const auto& g : sys.parameter_conditions())
    if (g.sign_at(m0) <= 0) return {};
  SpecializedSystem s = specialize(sys, m0);
  try {
    return solve_zero_dimensional(s.vars, s.equations, s.positives, opts);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotZeroDimensional) throw;
    throw Error(ErrorKind::NotZeroDimensional, std::string(e.what()) + " at " + sys.parameter + " = " + to_string(m0));
  }
}

SatVerdict sat_at_algebraic(const ParametricSystem& sys, const RealAlgebraicNumber& a, const ZdOptions& opts) {
  if (a.is_rational()) return sat_at_rational(sys, a.rational_value(), opts);
  sys.validate();
  sys.require_square();
  for (const auto& g : sys.parameter_conditions())
    if (sign_at(g, a) <= 0) return {};
  std::vector<std::string> vars{sys.parameter};
  vars.insert(vars.end(), sys.bound_vars.begin(), sys.bound_vars.end());
  std::vector<MultiPoly> eqs = sys.equations;
  eqs.push_back(a.defining().renamed(sys.parameter).to_multi());
  // the interval conditions reject most conjugates, so they are tested first
  const MultiPoly m = MultiPoly::variable(sys.parameter);
  std::vector<MultiPoly> pos{m - MultiPoly::constant(a.lo()), MultiPoly::constant(a.hi()) - m};
  for (auto& g : sys.bound_conditions()) pos.push_back(std::move(g));
  try {
    return solve_zero_dimensional(vars, eqs, pos, opts);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotZeroDimensional) throw;
    throw Error(ErrorKind::NotZeroDimensional, std::string(e.what()) + " at " + sys.parameter + " = " + a.to_string());
  }
}

SatVerdict sat_at(const ParametricSystem& sys, const CellPoint& p, const ZdOptions& opts) {
  return p.is_rational() ? sat_at_rational(sys, p.rational_value(), opts) : sat_at_algebraic(sys, p, opts);
}

std::vector<int> count_constancy_probe(const ParametricSystem& sys, const std::optional<CellPoint>& lo,
                                       const std::optional<CellPoint>& hi, int k, std::uint64_t seed,
                                       const ZdOptions& opts) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "need at least two probes");
  Rational a, b;
  if (lo && hi) {
    if (!(*lo < *hi)) throw Error(ErrorKind::InvalidArgument, "empty cell");
    CellPoint l = *lo, h = *hi;
    while (!(l.upper_bound() < h.lower_bound())) {
      l = l.bisected();
      h = h.bisected();
    }
    a = l.upper_bound();
    b = h.lower_bound();
  } else if (lo) {
    a = lo->upper_bound();
    b = a + 10;
  } else if (hi) {
    b = hi->lower_bound();
    a = b - 10;
  } else {
    a = -10;
    b = 10;
  }
  // k distinct interior grid points a + (b - a)·j/N
  const int n = 4096;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, n - 1);
  std::set<int> chosen;
  while (static_cast<int>(chosen.size()) < k) chosen.insert(pick(rng));
  std::vector<int> out;
  for (int j : chosen) out.push_back(sat_at_rational(sys, a + (b - a) * Rational(j, n), opts).count);
  return out;
}

}  // namespace prf
