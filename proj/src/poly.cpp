#include "prf/poly.hpp"

#include "prf/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace prf {

std::uint32_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

namespace {

std::uint32_t at(const Exponents& e, std::size_t i) { return i < e.size() ? e[i] : 0; }

}  // namespace

int compare_lex(const Exponents& a, const Exponents& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto x = at(a, i), y = at(b, i);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

int compare_grevlex(const Exponents& a, const Exponents& b, std::size_t begin, std::size_t end) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = begin; i < end; ++i) {
    da += at(a, i);
    db += at(b, i);
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = end; i-- > begin;) {
    auto x = at(a, i), y = at(b, i);
    if (x != y) return x > y ? -1 : 1;
  }
  return 0;
}

MonomialOrder MonomialOrder::lex(std::vector<std::string> ranking) {
  return MonomialOrder(Kind::Lex, std::move(ranking), 0);
}

MonomialOrder MonomialOrder::grevlex(std::vector<std::string> ranking) {
  return MonomialOrder(Kind::GrevLex, std::move(ranking), 0);
}

MonomialOrder MonomialOrder::block(std::vector<std::string> eliminated, std::vector<std::string> kept) {
  const std::size_t k = eliminated.size();
  eliminated.insert(eliminated.end(), kept.begin(), kept.end());
  return MonomialOrder(Kind::Block, std::move(eliminated), k);
}

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  const std::size_t n = std::max({a.size(), b.size(), ranking_.size()});
  switch (kind_) {
    case Kind::Lex: return compare_lex(a, b);
    case Kind::GrevLex: return compare_grevlex(a, b, 0, n);
    case Kind::Block: {
      int c = compare_grevlex(a, b, 0, block_size_);
      return c != 0 ? c : compare_grevlex(a, b, block_size_, n);
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// MultiPoly

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(std::vector<std::string> vars, TermMap terms) : vars_(std::move(vars)) {
  for (auto& [e, c] : terms) {
    if (c == 0) continue;
    if (e.size() != vars_.size()) throw Error(ErrorKind::InvalidArgument, "exponent vector does not match universe");
    terms_.emplace(e, c);
  }
}

MultiPoly MultiPoly::constant(const Rational& c, std::vector<std::string> vars) {
  MultiPoly p(std::move(vars));
  if (c != 0) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name, std::vector<std::string> vars) {
  if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
  MultiPoly p(std::move(vars));
  Exponents e(p.vars_.size(), 0);
  e[std::find(p.vars_.begin(), p.vars_.end(), name) - p.vars_.begin()] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t MultiPoly::degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

std::uint32_t MultiPoly::degree_in(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  const std::size_t i = it - vars_.begin();
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

std::vector<std::string> MultiPoly::support() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (const auto& [e, c] : terms_) {
      if (e[i] != 0) {
        out.push_back(vars_[i]);
        break;
      }
    }
  }
  return out;
}

bool MultiPoly::depends_on(const std::string& var) const { return degree_in(var) > 0; }

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    map[i] = it == vars.end() ? vars.size() : static_cast<std::size_t>(it - vars.begin());
  }
  MultiPoly out(vars);
  for (const auto& [e, c] : terms_) {
    Exponents f(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] == vars.size())
        throw Error(ErrorKind::InvalidArgument, "variable '" + vars_[i] + "' missing from target universe");
      f[map[i]] = e[i];
    }
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.vars_ != vars_) {
    auto u = merge_vars(vars_, other.vars_);
    *this = with_vars(u);
    return *this += other.with_vars(u);
  }
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) { return *this += -other; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  if (other.vars_ != vars_) {
    auto u = merge_vars(vars_, other.vars_);
    *this = with_vars(u);
    return *this *= other.with_vars(u);
  }
  TermMap out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.emplace(std::move(e), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  return (a - b).is_zero();
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(1, vars_);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return *this;
  const std::size_t idx = it - vars_.begin();
  auto u = merge_vars(vars_, value.vars_);
  MultiPoly v = value.with_vars(u);
  // group terms by the exponent of var, then Horner in descending powers
  std::map<std::uint32_t, MultiPoly> by_power;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    const auto k = f[idx];
    f[idx] = 0;
    f.resize(u.size(), 0);
    auto [slot, inserted] = by_power.try_emplace(k, MultiPoly(u));
    slot->second.terms_.emplace(std::move(f), c);
  }
  MultiPoly result(u);
  std::uint32_t prev = by_power.empty() ? 0 : by_power.rbegin()->first;
  for (auto rit = by_power.rbegin(); rit != by_power.rend(); ++rit) {
    result *= v.pow(prev - rit->first);
    result += rit->second;
    prev = rit->first;
  }
  result *= v.pow(prev);
  return result;
}

MultiPoly MultiPoly::substitute(const std::string& var, const Rational& value) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return *this;
  const std::size_t idx = it - vars_.begin();
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    Rational factor = c;
    if (f[idx] > 0) {
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), value.get_num_mpz_t(), f[idx]);
      mpz_pow_ui(pw.get_den_mpz_t(), value.get_den_mpz_t(), f[idx]);
      factor *= pw;
    }
    f[idx] = 0;
    if (factor == 0) continue;
    auto [slot, inserted] = out.terms_.emplace(std::move(f), factor);
    if (!inserted) {
      slot->second += factor;
      if (slot->second == 0) out.terms_.erase(slot);
    }
  }
  return out;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  MultiPoly out(vars_);
  if (it == vars_.end()) return out;
  const std::size_t idx = it - vars_.begin();
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents f = e;
    f[idx] -= 1;
    out.terms_.emplace(std::move(f), c * e[idx]);
  }
  return out;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> vals(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it != point.end()) vals[i] = it->second;
    else if (depends_on(vars_[i]))
      throw Error(ErrorKind::InvalidArgument, "no value for variable '" + vars_[i] + "'");
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= vals[i];
    sum += t;
  }
  return sum;
}

double MultiPoly::evaluate(const std::map<std::string, double>& point) const {
  std::vector<double> vals(vars_.size(), 0.0);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it != point.end()) vals[i] = it->second;
  }
  double sum = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= std::pow(vals[i], static_cast<double>(e[i]));
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::compact() const { return with_vars(support()); }

UniPoly MultiPoly::to_uni(const std::string& var) const {
  for (const auto& v : support())
    if (v != var) throw Error(ErrorKind::InvalidArgument, "polynomial is not univariate in '" + var + "'");
  auto it = std::find(vars_.begin(), vars_.end(), var);
  std::vector<Rational> coeffs(degree_in(var) + 1);
  for (const auto& [e, c] : terms_) coeffs[it == vars_.end() ? 0 : e[it - vars_.begin()]] += c;
  return UniPoly(var, std::move(coeffs));
}

std::pair<Exponents, Rational> MultiPoly::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading term of zero polynomial");
  auto u = merge_vars(order.ranking(), vars_);
  MultiPoly p = with_vars(u);
  auto best = p.terms_.begin();
  for (auto it = std::next(best); it != p.terms_.end(); ++it)
    if (order.compare(it->first, best->first) > 0) best = it;
  return *best;
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return *this;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  return *this * scale;
}

namespace {

void append_term(std::ostringstream& os, bool first, const Rational& c, const std::string& mono) {
  Rational mag = abs(c);
  if (c < 0) os << (first ? "-" : "-");
  else if (!first) os << "+";
  if (mono.empty()) {
    os << to_string(mag);
  } else {
    if (mag != 1) os << to_string(mag) << "*";
    os << mono;
  }
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
    return compare_grevlex(a.first, b.first, 0, vars_.size()) > 0;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    append_term(os, first, c, mono);
    first = false;
  }
  return os.str();
}

MultiPoly reduce(const MultiPoly& p, std::span<const MultiPoly> divisors, const MonomialOrder& order) {
  auto u = merge_vars(order.ranking(), p.vars());
  for (const auto& d : divisors) u = merge_vars(u, d.vars());
  std::vector<std::pair<Exponents, Rational>> leads;
  std::vector<MultiPoly> divs;
  for (const auto& d : divisors) {
    if (d.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    divs.push_back(d.with_vars(u));
    leads.push_back(divs.back().leading_term(order));
  }
  MultiPoly rest = p.with_vars(u);
  MultiPoly remainder(u);
  while (!rest.is_zero()) {
    auto [lm, lc] = rest.leading_term(order);
    bool divided = false;
    for (std::size_t i = 0; i < divs.size(); ++i) {
      const auto& dl = leads[i].first;
      bool divides = true;
      for (std::size_t k = 0; k < u.size(); ++k)
        if (dl[k] > lm[k]) {
          divides = false;
          break;
        }
      if (!divides) continue;
      Exponents shift(u.size());
      for (std::size_t k = 0; k < u.size(); ++k) shift[k] = lm[k] - dl[k];
      MultiPoly factor(u, {{shift, lc / leads[i].second}});
      rest -= factor * divs[i];
      divided = true;
      break;
    }
    if (!divided) {
      MultiPoly lead(u, {{lm, lc}});
      remainder += lead;
      rest -= lead;
    }
  }
  return remainder.with_vars(merge_vars(p.vars(), remainder.support()));
}

MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  auto u = merge_vars(a.vars(), b.vars());
  auto order = MonomialOrder::lex(u);
  MultiPoly rest = a.with_vars(u);
  MultiPoly div = b.with_vars(u);
  auto [dl, dc] = div.leading_term(order);
  MultiPoly quotient(u);
  while (!rest.is_zero()) {
    auto [lm, lc] = rest.leading_term(order);
    Exponents shift(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (dl[k] > lm[k]) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
      shift[k] = lm[k] - dl[k];
    }
    MultiPoly factor(u, {{shift, lc / dc}});
    quotient += factor;
    rest -= factor * div;
  }
  return quotient;
}

MultiPoly partial_jacobian_det(std::span<const MultiPoly> fs, const std::vector<std::string>& vars) {
  const std::size_t n = fs.size();
  if (n != vars.size())
    throw Error(ErrorKind::NonSquareSystem, "Jacobian needs as many equations (" + std::to_string(n) +
                                                ") as variables (" + std::to_string(vars.size()) + ")");
  std::vector<std::string> u = vars;
  for (const auto& f : fs) u = merge_vars(u, f.vars());
  if (n == 0) return MultiPoly::constant(1, u);
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = fs[i].with_vars(u).derivative(vars[j]);

  // Bareiss: after step k, entries are k+1 order minors; division by the
  // previous pivot is exact.
  MultiPoly prev = MultiPoly::constant(1, u);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return MultiPoly(u);
      std::swap(m[k], m[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_quotient(num, prev);
      }
    }
    prev = m[k][k];
  }
  MultiPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

MultiPoly homogenize(const MultiPoly& p, const std::string& fresh, const std::set<std::string>& wrt) {
  if (std::find(p.vars().begin(), p.vars().end(), fresh) != p.vars().end())
    throw Error(ErrorKind::VariableClash, "homogenizing variable '" + fresh + "' already in use");
  auto u = p.vars();
  u.push_back(fresh);
  std::vector<bool> mask(u.size(), false);
  for (std::size_t i = 0; i < p.vars().size(); ++i) mask[i] = wrt.count(p.vars()[i]) > 0;
  auto deg = [&](const Exponents& e) {
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (mask[i]) d += e[i];
    return d;
  };
  std::uint32_t top = 0;
  for (const auto& [e, c] : p.terms()) top = std::max(top, deg(e));
  MultiPoly::TermMap terms;
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f.push_back(top - deg(e));
    terms.emplace(std::move(f), c);
  }
  return MultiPoly(u, std::move(terms));
}

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::string var, std::vector<Rational> coeffs) : var_(std::move(var)), coeffs_(std::move(coeffs)) {
  trim();
}

UniPoly UniPoly::monomial(std::string var, const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return UniPoly(std::move(var), std::move(coeffs));
}

UniPoly UniPoly::linear_root(std::string var, const Rational& root) {
  return UniPoly(std::move(var), {-root, Rational(1)});
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& UniPoly::lc() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double UniPoly::evaluate(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

int UniPoly::sign_at(const Rational& x) const { return sgn(evaluate(x)); }

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return UniPoly(var_, std::move(d));
}

UniPoly UniPoly::monic() const {
  if (coeffs_.empty()) return *this;
  UniPoly out = *this;
  Rational inv = 1 / lc();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

UniPoly UniPoly::primitive() const {
  if (coeffs_.empty()) return *this;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& c : coeffs_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (lc() < 0) scale = -scale;
  return *this * scale;
}

bool UniPoly::is_even() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2)
    if (coeffs_[i] != 0) return false;
  return true;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

MultiPoly UniPoly::to_multi() const {
  MultiPoly::TermMap terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) terms.emplace(Exponents{static_cast<std::uint32_t>(i)}, coeffs_[i]);
  return MultiPoly({var_}, std::move(terms));
}

std::string UniPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    std::string mono;
    if (i >= 1) mono = var_;
    if (i >= 2) mono += "^" + std::to_string(i);
    append_term(os, first, coeffs_[i], mono);
    first = false;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(a.var()), a};
  std::vector<Rational> quot(a.degree() - db + 1);
  const Rational inv = 1 / b.lc();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] * inv;
    quot[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {UniPoly(a.var(), std::move(quot)), UniPoly(a.var(), std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InvalidArgument, "inexact univariate division");
  return q;
}

namespace {

using IntCoeffs = std::vector<Integer>;

IntCoeffs integer_coeffs(const UniPoly& p) {
  const UniPoly q = p.primitive();
  IntCoeffs out;
  for (const auto& c : q.coeffs()) out.push_back(c.get_num());
  return out;
}

void make_primitive(IntCoeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) return;
  Integer g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

/// Primitive part of the pseudo-remainder of x by y.
IntCoeffs primitive_prem(IntCoeffs x, const IntCoeffs& y) {
  const std::size_t dy = y.size() - 1;
  Integer g, a, b;
  while (x.size() >= y.size()) {
    // a·x − b·X^k·y cancels the leading term
    mpz_gcd(g.get_mpz_t(), x.back().get_mpz_t(), y.back().get_mpz_t());
    mpz_divexact(a.get_mpz_t(), y.back().get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), x.back().get_mpz_t(), g.get_mpz_t());
    const std::size_t k = x.size() - 1 - dy;
    for (auto& c : x) c *= a;
    for (std::size_t j = 0; j <= dy; ++j) mpz_submul(x[k + j].get_mpz_t(), b.get_mpz_t(), y[j].get_mpz_t());
    while (!x.empty() && x.back() == 0) x.pop_back();
  }
  make_primitive(x);
  return x;
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  // Euclid on primitive integer remainders keeps coefficients small.
  IntCoeffs x = integer_coeffs(a), y = integer_coeffs(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntCoeffs r = primitive_prem(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rational> c(x.begin(), x.end());
  return UniPoly(a.var(), std::move(c)).monic();
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "square-free part of the zero polynomial");
  if (p.degree() == 0) return UniPoly(p.var(), {Rational(1)});
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

UniPoly compose(const UniPoly& p, const UniPoly& q) {
  UniPoly acc(q.var());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc *= q;
    acc += UniPoly(q.var(), {*it});
  }
  return acc;
}

}  // namespace prf
