#include "prf/groebner.hpp"

#include "prf/error.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <optional>
#include <span>

namespace prf {

namespace detail {

constexpr std::size_t kMaxVars = 16;

struct Mono {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  bool divides(const Mono& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
};

Mono lcm(const Mono& a, const Mono& b) {
  Mono out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    out.e[i] = std::max(a.e[i], b.e[i]);
    out.deg += out.e[i];
  }
  return out;
}

Mono quotient(const Mono& a, const Mono& b) {
  Mono out;
  for (std::size_t i = 0; i < kMaxVars; ++i) out.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  out.deg = a.deg - b.deg;
  return out;
}

Mono product(const Mono& a, const Mono& b) {
  Mono out;
  for (std::size_t i = 0; i < kMaxVars; ++i) out.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  out.deg = a.deg + b.deg;
  return out;
}

bool coprime(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

class Order {
 public:
  Order(MonomialOrder::Kind kind, std::size_t nvars, std::size_t block) : kind_(kind), n_(nvars), block_(block) {}

  int compare(const Mono& a, const Mono& b) const {
    switch (kind_) {
      case MonomialOrder::Kind::Lex:
        for (std::size_t i = 0; i < n_; ++i)
          if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        return 0;
      case MonomialOrder::Kind::GrevLex:
        if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
        return revlex(a, b, 0, n_);
      case MonomialOrder::Kind::Block: {
        int c = grevlex(a, b, 0, block_);
        return c != 0 ? c : grevlex(a, b, block_, n_);
      }
    }
    return 0;
  }

 private:
  static int revlex(const Mono& a, const Mono& b, std::size_t begin, std::size_t end) {
    for (std::size_t i = end; i-- > begin;)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
  }
  static int grevlex(const Mono& a, const Mono& b, std::size_t begin, std::size_t end) {
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = begin; i < end; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    return revlex(a, b, begin, end);
  }

  MonomialOrder::Kind kind_;
  std::size_t n_;
  std::size_t block_;
};

struct Term {
  Mono m;
  Integer c;
};

/// Integer polynomial, terms strictly decreasing in the active order.
using IPoly = std::vector<Term>;

/// Divides by the content (sign of the leading coefficient included) and
/// returns the divisor.
Integer make_primitive(IPoly& p) {
  if (p.empty()) return Integer(1);
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.front().c < 0) g = -g;
  if (g != 1)
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  return g;
}

/// a*p - b*shift*q, where p's leading term cancels (terms of p from `from`).
IPoly combine(const IPoly& p, std::size_t from, const Integer& a, const Integer& b, const Mono& shift,
              std::span<const Term> q, const Order& ord) {
  IPoly out;
  out.reserve(p.size() - from + q.size());
  std::size_t i = from, j = 0;
  Integer tmp;
  while (i < p.size() || j < q.size()) {
    if (j == q.size()) {
      out.push_back({p[i].m, a * p[i].c});
      ++i;
      continue;
    }
    Mono qm = product(q[j].m, shift);
    int c = i < p.size() ? ord.compare(p[i].m, qm) : -1;
    if (c > 0) {
      out.push_back({p[i].m, a * p[i].c});
      ++i;
    } else if (c < 0) {
      out.push_back({qm, -b * q[j].c});
      ++j;
    } else {
      tmp = a * p[i].c;
      mpz_submul(tmp.get_mpz_t(), b.get_mpz_t(), q[j].c.get_mpz_t());
      if (tmp != 0) out.push_back({qm, tmp});
      ++i;
      ++j;
    }
  }
  return out;
}

struct Reducer {
  const Order& ord;
  const std::vector<IPoly>& polys;
  const std::vector<std::size_t>& active;

  const IPoly* find_divisor(const Mono& m) const {
    for (std::size_t idx : active) {
      const IPoly& g = polys[idx];
      if (g.front().m.divides(m)) return &g;
    }
    return nullptr;
  }

  /// Full (top + tail) reduction; the result is primitive and
  /// NF(input) = *scale * result when `scale` is given.
  IPoly full(IPoly p, Rational* scale = nullptr) const {
    IPoly rem;
    Rational factor = 1;
    std::size_t head = 0;
    Integer a, b, g;
    while (head < p.size()) {
      const Term& t = p[head];
      const IPoly* div = find_divisor(t.m);
      if (!div) {
        rem.push_back(std::move(p[head]));
        ++head;
        continue;
      }
      const Integer& lc = div->front().c;
      mpz_gcd(g.get_mpz_t(), lc.get_mpz_t(), t.c.get_mpz_t());
      mpz_divexact(a.get_mpz_t(), lc.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
      if (a < 0) {
        a = -a;
        b = -b;
      }
      Mono shift = quotient(t.m, div->front().m);
      p = combine(p, head + 1, a, b, shift, std::span<const Term>(*div).subspan(1), ord);
      head = 0;
      if (a != 1) {
        for (auto& r : rem) r.c *= a;
        factor /= Rational(a);
      }
      if (p.size() > 8 && mpz_sizeinbase(p.front().c.get_mpz_t(), 2) > 2048) {
        // keep coefficient growth in check: remove the joint content
        Integer cont = 0;
        for (const auto& x : p) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), x.c.get_mpz_t());
        for (const auto& x : rem) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), x.c.get_mpz_t());
        if (cont > 1) {
          for (auto& x : p) mpz_divexact(x.c.get_mpz_t(), x.c.get_mpz_t(), cont.get_mpz_t());
          for (auto& x : rem) mpz_divexact(x.c.get_mpz_t(), x.c.get_mpz_t(), cont.get_mpz_t());
          factor *= Rational(cont);
        }
      }
    }
    factor *= Rational(make_primitive(rem));
    if (scale) *scale = factor;
    return rem;
  }
};

IPoly spoly(const IPoly& f, const IPoly& g, const Order& ord) {
  Mono l = lcm(f.front().m, g.front().m);
  Integer gg;
  mpz_gcd(gg.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
  Integer a = g.front().c / gg;  // multiplies f
  Integer b = f.front().c / gg;  // multiplies g
  // a * (l/lm f) * f - b * (l/lm g) * g, leading terms cancel
  IPoly fs;
  Mono sf = quotient(l, f.front().m);
  for (std::size_t i = 1; i < f.size(); ++i) fs.push_back({product(f[i].m, sf), f[i].c});
  IPoly out = combine(fs, 0, a, b, quotient(l, g.front().m), std::span<const Term>(g).subspan(1), ord);
  make_primitive(out);
  return out;
}

struct IntBasis {
  Order ord;
  std::size_t nvars;
  std::vector<IPoly> polys;
  std::vector<std::size_t> active;
};

}  // namespace detail

using detail::IPoly;
using detail::Mono;

namespace {

std::vector<std::string> universe_for(const Ideal& ideal, const MonomialOrder& order) {
  auto u = order.ranking();
  u = merge_vars(u, ideal.vars);
  for (const auto& g : ideal.generators) u = merge_vars(u, g.vars());
  return u;
}

/// `p` must already have coprime integer coefficients.
IPoly to_ipoly_raw(const MultiPoly& q, const detail::Order& ord) {
  IPoly out;
  for (const auto& [e, c] : q.terms()) {
    detail::Term t;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0xFFFF) throw Error(ErrorKind::ResourceBudgetExceeded, "exponent overflow");
      t.m.e[i] = static_cast<std::uint16_t>(e[i]);
      t.m.deg += e[i];
    }
    t.c = c.get_num();
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return ord.compare(a.m, b.m) > 0; });
  return out;
}

IPoly to_ipoly(const MultiPoly& p, const std::vector<std::string>& u, const detail::Order& ord) {
  IPoly out = to_ipoly_raw(p.with_vars(u).primitive(), ord);
  detail::make_primitive(out);
  return out;
}

/// Monic conversion unless an explicit scale is given.
MultiPoly to_multi(const IPoly& p, const std::vector<std::string>& u, std::optional<Rational> scale = std::nullopt) {
  MultiPoly::TermMap terms;
  if (p.empty()) return MultiPoly(u);
  Rational inv(Integer(1), p.front().c);
  inv.canonicalize();
  if (scale) inv = *scale;
  for (const auto& t : p) {
    Exponents e(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) e[i] = t.m.e[i];
    terms.emplace(std::move(e), Rational(t.c) * inv);
  }
  return MultiPoly(u, std::move(terms));
}

struct Pair {
  std::size_t i, j;
  Mono lcm;
};

class Buchberger {
 public:
  Buchberger(const detail::Order& ord, const GroebnerCaps& caps) : ord_(ord), caps_(caps) {
    start_ = std::chrono::steady_clock::now();
  }

  void add_generator(IPoly p) {
    detail::Reducer red{ord_, polys_, active_};
    p = red.full(std::move(p));
    if (!p.empty()) update(std::move(p));
  }

  void run() {
    while (!pairs_.empty()) {
      if (++steps_ > caps_.max_pair_reductions)
        throw Error(ErrorKind::ResourceBudgetExceeded,
                    "Gröbner basis exceeded " + std::to_string(caps_.max_pair_reductions) + " pair reductions");
      check_time();
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (better(pairs_[k], pairs_[best])) best = k;
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      IPoly s = detail::spoly(polys_[pr.i], polys_[pr.j], ord_);
      detail::Reducer red{ord_, polys_, active_};
      s = red.full(std::move(s));
      if (s.empty()) continue;
      if (s.front().m.deg > caps_.max_degree)
        throw Error(ErrorKind::ResourceBudgetExceeded,
                    "Gröbner basis element exceeded total degree " + std::to_string(caps_.max_degree));
      if (s.front().m.deg == 0) {
        // unit ideal
        polys_.push_back(std::move(s));
        active_ = {polys_.size() - 1};
        pairs_.clear();
        return;
      }
      update(std::move(s));
    }
  }

  /// Minimal, inter-reduced, sorted ascending by leading monomial.
  std::vector<IPoly> reduced() const {
    std::vector<IPoly> g;
    for (std::size_t idx : active_) g.push_back(polys_[idx]);
    std::sort(g.begin(), g.end(), [&](const IPoly& a, const IPoly& b) { return ord_.compare(a.front().m, b.front().m) < 0; });
    std::vector<IPoly> out;
    for (std::size_t k = 0; k < g.size(); ++k) {
      // the basis is minimal, so only tail terms of g[k] can be reduced
      std::vector<std::size_t> others;
      for (std::size_t l = 0; l < g.size(); ++l)
        if (l != k) others.push_back(l);
      detail::Reducer red{ord_, g, others};
      out.push_back(red.full(g[k]));
    }
    return out;
  }

  std::size_t steps() const { return steps_; }

 private:
  bool better(const Pair& a, const Pair& b) const {
    if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
    int c = ord_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  void check_time() const {
    if (caps_.time_limit_seconds <= 0) return;
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (elapsed > caps_.time_limit_seconds)
      throw Error(ErrorKind::ResourceBudgetExceeded,
                  "Gröbner basis exceeded the time limit of " + std::to_string(caps_.time_limit_seconds) + " s");
  }

  /// Gebauer-Möller update with a new element h.
  void update(IPoly h) {
    polys_.push_back(std::move(h));
    const std::size_t hi = polys_.size() - 1;
    const Mono& hm = polys_[hi].front().m;

    std::vector<Pair> c;
    for (std::size_t g : active_) c.push_back({g, hi, detail::lcm(polys_[g].front().m, hm)});

    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = detail::coprime(polys_[p.i].front().m, hm);
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l)
          if (c[l].lcm.divides(p.lcm)) keep = false;
        for (std::size_t l = 0; l < d.size() && keep; ++l)
          if (d[l].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> e;
    for (const Pair& p : d)
      if (!detail::coprime(polys_[p.i].front().m, hm)) e.push_back(p);

    std::vector<Pair> kept;
    for (const Pair& p : pairs_) {
      bool drop = hm.divides(p.lcm) && !(detail::lcm(polys_[p.i].front().m, hm) == p.lcm) &&
                  !(detail::lcm(hm, polys_[p.j].front().m) == p.lcm);
      if (!drop) kept.push_back(p);
    }
    kept.insert(kept.end(), e.begin(), e.end());
    pairs_ = std::move(kept);

    std::vector<std::size_t> still;
    for (std::size_t g : active_)
      if (!hm.divides(polys_[g].front().m)) still.push_back(g);
    still.push_back(hi);
    active_ = std::move(still);
  }

  const detail::Order& ord_;
  GroebnerCaps caps_;
  std::vector<IPoly> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  std::size_t steps_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

Ideal::Ideal(std::vector<MultiPoly> gens, std::vector<std::string> universe)
    : generators(std::move(gens)), vars(std::move(universe)) {
  for (const auto& g : generators) vars = merge_vars(vars, g.vars());
}

GroebnerBasis::GroebnerBasis(std::vector<MultiPoly> basis, MonomialOrder order,
                             std::shared_ptr<const detail::IntBasis> engine)
    : basis_(std::move(basis)), order_(std::move(order)), engine_(std::move(engine)) {}

bool GroebnerBasis::is_unit() const { return basis_.size() == 1 && basis_.front().is_constant() && !basis_.front().is_zero(); }

Exponents GroebnerBasis::leading_monomial(std::size_t i) const {
  const auto& m = engine_->polys[engine_->active[i]].front().m;
  return Exponents(m.e.begin(), m.e.begin() + static_cast<std::ptrdiff_t>(engine_->nvars));
}

MultiPoly GroebnerBasis::normal_form(const MultiPoly& p) const {
  const auto& u = basis_.empty() ? order_.ranking() : basis_.front().vars();
  for (const auto& v : p.support())
    if (std::find(u.begin(), u.end(), v) == u.end())
      throw Error(ErrorKind::InvalidArgument, "variable '" + v + "' outside the basis universe");
  if (p.is_zero()) return MultiPoly(u);
  MultiPoly q = p.with_vars(u);
  MultiPoly prim = q.primitive();
  Rational input_scale = q.terms().begin()->second / prim.terms().begin()->second;
  detail::Reducer red{engine_->ord, engine_->polys, engine_->active};
  Rational nf_scale;
  IPoly r = red.full(to_ipoly_raw(prim, engine_->ord), &nf_scale);
  return to_multi(r, u, input_scale * nf_scale);
}

bool GroebnerBasis::is_zero_dimensional() const {
  if (basis_.empty() || is_unit()) return false;
  const std::size_t n = engine_->nvars;
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (std::size_t idx : engine_->active) {
      const Mono& m = engine_->polys[idx].front().m;
      if (m.e[v] > 0 && m.deg == m.e[v]) found = true;
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Rational> GroebnerBasis::minimal_polynomial(const MultiPoly& f) const {
  if (!is_zero_dimensional())
    throw Error(ErrorKind::NotZeroDimensional, "minimal polynomial needs a zero-dimensional ideal");
  // incremental echelon form of NF(f^k); each row remembers its combination
  // of powers so the first dependency yields the polynomial
  struct Row {
    std::map<Exponents, Rational> v;
    std::vector<Rational> comb;
  };
  std::vector<std::pair<Exponents, Row>> rows;  // pivot monomial, row
  MultiPoly power = normal_form(MultiPoly::constant(1));
  const MultiPoly fn = normal_form(f);
  for (std::size_t k = 0;; ++k) {
    Row r;
    for (const auto& [e, c] : power.terms()) r.v.emplace(e, c);
    r.comb.assign(k + 1, Rational(0));
    r.comb[k] = 1;
    for (const auto& [piv, row] : rows) {
      auto it = r.v.find(piv);
      if (it == r.v.end()) continue;
      Rational c = it->second;  // row is normalised to 1 at its pivot
      for (const auto& [e, x] : row.v) {
        Rational& y = r.v[e];
        y -= c * x;
        if (y == 0) r.v.erase(e);
      }
      for (std::size_t i = 0; i < row.comb.size(); ++i) r.comb[i] -= c * row.comb[i];
    }
    if (r.v.empty()) {
      Rational lead = r.comb[k];
      for (auto& c : r.comb) c /= lead;
      return r.comb;
    }
    Exponents piv = r.v.begin()->first;
    Rational inv = Rational(1) / r.v.begin()->second;
    for (auto& [e, x] : r.v) x *= inv;
    for (auto& c : r.comb) c *= inv;
    rows.emplace_back(std::move(piv), std::move(r));
    power = normal_form(power * fn);
  }
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order) {
  auto u = merge_vars(merge_vars(order.ranking(), f.vars()), g.vars());
  MultiPoly a = f.with_vars(u), b = g.with_vars(u);
  auto [la, ca] = a.leading_term(order);
  auto [lb, cb] = b.leading_term(order);
  Exponents l(u.size()), sa(u.size()), sb(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    l[i] = std::max(la[i], lb[i]);
    sa[i] = l[i] - la[i];
    sb[i] = l[i] - lb[i];
  }
  return MultiPoly(u, {{sa, Rational(1) / ca}}) * a - MultiPoly(u, {{sb, Rational(1) / cb}}) * b;
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerCaps& caps) {
  auto u = universe_for(ideal, order);
  if (u.size() > detail::kMaxVars)
    throw Error(ErrorKind::InvalidArgument, "at most " + std::to_string(detail::kMaxVars) + " variables supported");
  std::size_t block = order.kind() == MonomialOrder::Kind::Block ? order.block_size() : 0;
  auto engine = std::make_shared<detail::IntBasis>(
      detail::IntBasis{detail::Order(order.kind(), u.size(), block), u.size(), {}, {}});
  Buchberger bb(engine->ord, caps);
  bool any = false;
  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    any = true;
    bb.add_generator(to_ipoly(g, u, engine->ord));
  }
  if (!any) return GroebnerBasis({}, MonomialOrder(order), engine);
  bb.run();
  engine->polys = bb.reduced();
  for (std::size_t i = 0; i < engine->polys.size(); ++i) engine->active.push_back(i);
  std::vector<MultiPoly> basis;
  for (const auto& p : engine->polys) basis.push_back(to_multi(p, u));
  return GroebnerBasis(std::move(basis), order, engine);
}

std::vector<MultiPoly> elimination_ideal(const Ideal& ideal, const std::vector<std::string>& keep,
                                         const GroebnerCaps& caps) {
  for (const auto& k : keep)
    if (std::find(ideal.vars.begin(), ideal.vars.end(), k) == ideal.vars.end())
      throw Error(ErrorKind::InvalidArgument, "kept variable '" + k + "' not in the universe");
  std::vector<std::string> eliminated;
  for (const auto& v : ideal.vars)
    if (std::find(keep.begin(), keep.end(), v) == keep.end()) eliminated.push_back(v);
  if (keep.size() == 1) {
    GroebnerBasis g0 = buchberger(ideal, MonomialOrder::grevlex(ideal.vars), caps);
    if (g0.is_unit()) return {MultiPoly(keep) + MultiPoly::constant(1)};
    if (g0.is_zero_dimensional()) {
      auto c = g0.minimal_polynomial(MultiPoly::variable(keep.front()));
      return {UniPoly(keep.front(), std::move(c)).to_multi()};
    }
  }
  auto order = MonomialOrder::block(eliminated, keep);
  GroebnerBasis gb = buchberger(ideal, order, caps);
  std::vector<MultiPoly> out;
  for (const auto& g : gb.basis()) {
    bool inside = true;
    for (const auto& v : g.support())
      if (std::find(keep.begin(), keep.end(), v) == keep.end()) inside = false;
    if (inside) out.push_back(g.with_vars(keep));
  }
  return out;
}

std::string fresh_variable(const std::string& base, const std::vector<std::string>& taken) {
  std::string name = base;
  for (int k = 1; std::find(taken.begin(), taken.end(), name) != taken.end(); ++k) name = base + std::to_string(k);
  return name;
}

Ideal saturate(const Ideal& ideal, const MultiPoly& h, const GroebnerCaps& caps) {
  if (h.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "saturation by the zero polynomial");
  auto universe = merge_vars(ideal.vars, h.vars());
  const std::string t = fresh_variable("t", universe);
  std::vector<MultiPoly> gens = ideal.generators;
  gens.push_back(MultiPoly::variable(t) * h - MultiPoly::constant(1));
  auto full = universe;
  full.insert(full.begin(), t);
  Ideal big(gens, full);
  return Ideal(elimination_ideal(big, universe, caps), universe);
}

std::vector<MultiPoly> specialize_to_zero(const std::vector<MultiPoly>& gens, const std::string& var) {
  std::vector<MultiPoly> out;
  for (const auto& g : gens) {
    MultiPoly s = g.substitute(var, Rational(0));
    if (!s.is_zero()) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace prf
