#include "prf/geometry.hpp"

#include "prf/error.hpp"
#include "prf/parse.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <set>

namespace prf {

namespace {

const std::vector<std::string> kSides{"a", "b", "c"};

/// Rational expressions as numerator/denominator pairs; quantities are atoms.
class RatioParser {
 public:
  RatioParser(const std::string& text, int line, int column) : s_(text), line_(line), column_(column) {}

  std::pair<MultiPoly, MultiPoly> parse() {
    auto r = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    if (r.second.is_zero()) fail("denominator is zero");
    return r;
  }

 private:
  using Frac = std::pair<MultiPoly, MultiPoly>;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, column_ + static_cast<int>(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static Frac one(const MultiPoly& p) { return {p, MultiPoly::constant(1)}; }

  Frac expr() {
    Frac acc = term();
    for (;;) {
      if (eat('+')) {
        Frac t = term();
        acc = {acc.first * t.second + t.first * acc.second, acc.second * t.second};
      } else if (eat('-')) {
        Frac t = term();
        acc = {acc.first * t.second - t.first * acc.second, acc.second * t.second};
      } else {
        return acc;
      }
    }
  }

  Frac term() {
    Frac acc = power();
    for (;;) {
      if (eat('*')) {
        Frac t = power();
        acc = {acc.first * t.first, acc.second * t.second};
      } else if (eat('/')) {
        const std::size_t at = pos_;
        Frac t = power();
        if (t.first.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc = {acc.first * t.second, acc.second * t.first};
      } else {
        return acc;
      }
    }
  }

  Frac power() {
    Frac base = unary();
    if (eat('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      const unsigned k = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
      base = {base.first.pow(k), base.second.pow(k)};
    }
    return base;
  }

  Frac unary() {
    if (eat('-')) {
      Frac f = unary();
      return {-f.first, f.second};
    }
    if (eat('+')) return unary();
    return primary();
  }

  Frac primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Frac f = expr();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return one(MultiPoly::constant(Rational(Integer(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      const auto& q = quantity_names();
      if (std::find(q.begin(), q.end(), name) == q.end())
        throw Error(ErrorKind::UnknownQuantity, std::to_string(line_) + ":" + std::to_string(column_ + start) +
                                                    ": unknown quantity '" + name + "'");
      return one(MultiPoly::variable(name));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
  int line_, column_;
};

MultiPoly P(const char* text) { return parse_poly(text); }
MultiPoly V(const std::string& name) { return MultiPoly::variable(name); }

/// Quantities each quantity's definition mentions (besides sides).
const std::map<std::string, std::vector<std::string>>& dependencies() {
  static const std::map<std::string, std::vector<std::string>> deps{
      {"m_a", {}}, {"m_b", {}}, {"m_c", {}}, {"p", {}}, {"s", {"p"}}, {"area", {}}, {"r", {"area", "s"}},
      {"R", {"area"}}};
  return deps;
}

/// Defining equation (= 0) of a non-side quantity, in unsubstituted sides.
MultiPoly definition(const std::string& q) {
  if (q == "m_a") return P("4*m_a^2 - (2*b^2 + 2*c^2 - a^2)");
  if (q == "m_b") return P("4*m_b^2 - (2*a^2 + 2*c^2 - b^2)");
  if (q == "m_c") return P("4*m_c^2 - (2*a^2 + 2*b^2 - c^2)");
  if (q == "p") return P("p - (a + b + c)");
  if (q == "s") return P("2*s - p");
  if (q == "area") return P("16*area^2 - (2*a^2*b^2 + 2*b^2*c^2 + 2*c^2*a^2 - a^4 - b^4 - c^4)");
  if (q == "r") return P("area - r*s");
  if (q == "R") return P("a*b*c - 4*R*area");
  throw Error(ErrorKind::UnknownQuantity, "no definition for '" + q + "'");
}

std::string meaning(const std::string& q) {
  static const std::map<std::string, std::string> m{
      {"a", "side BC"},          {"b", "side CA"},          {"c", "side AB"},
      {"m_a", "median from A"},  {"m_b", "median from B"},  {"m_c", "median from C"},
      {"p", "perimeter"},        {"s", "semiperimeter"},    {"area", "area"},
      {"r", "inradius"},         {"R", "circumradius"}};
  return m.at(q);
}

bool nonnegative_coefficients(const MultiPoly& p) {
  if (p.is_zero()) return false;
  for (const auto& [e, c] : p.terms())
    if (c < 0) return false;
  return true;
}

/// If g = α·x − β with constants α > 0, β ≥ 0, returns x.
std::optional<std::string> implied_positive(const MultiPoly& g) {
  auto sup = g.support();
  if (sup.size() != 1 || g.degree() != 1) return std::nullopt;
  const Rational beta = -g.constant_term();
  const MultiPoly lin = g + MultiPoly::constant(beta);
  // lin = α·x
  const Rational alpha = lin.evaluate({{sup.front(), Rational(1)}});
  if (alpha > 0 && beta >= 0) return sup.front();
  return std::nullopt;
}

}  // namespace

std::string to_string(TriangleClass c) { return c == TriangleClass::Isosceles ? "isosceles" : "right"; }

const std::vector<std::string>& quantity_names() {
  static const std::vector<std::string> names{"a", "b", "c", "m_a", "m_b", "m_c", "p", "s", "area", "r", "R"};
  return names;
}

std::pair<MultiPoly, MultiPoly> parse_ratio(const std::string& text, int line, int column) {
  return RatioParser(text, line, column).parse();
}

TriangleProblem make_problem(TriangleClass cls, const std::string& normalized_side, const std::string& ratio) {
  if (std::find(kSides.begin(), kSides.end(), normalized_side) == kSides.end())
    throw Error(ErrorKind::InvalidArgument, "normalized side must be a, b or c, not '" + normalized_side + "'");
  TriangleProblem p;
  p.cls = cls;
  p.normalized_side = normalized_side;
  std::tie(p.numerator, p.denominator) = parse_ratio(ratio);
  p.ratio_text = ratio;
  return p;
}

GeneratedSystem generate(const TriangleProblem& prob) {
  if (prob.numerator.is_zero()) throw Error(ErrorKind::InvalidArgument, "ratio numerator is identically zero");
  if (prob.denominator.is_zero()) throw Error(ErrorKind::InvalidArgument, "ratio denominator is identically zero");
  const std::string param = "m";

  // side values after class constraint and normalization
  std::map<std::string, MultiPoly> side{{"a", V("a")}, {"b", V("b")}, {"c", V("c")}};
  if (prob.cls == TriangleClass::Isosceles) side["a"] = V("b");
  if (prob.cls == TriangleClass::Isosceles && (prob.normalized_side == "a" || prob.normalized_side == "b")) {
    side["a"] = side["b"] = MultiPoly::constant(1);
  } else {
    side[prob.normalized_side] = MultiPoly::constant(1);
  }
  auto subst_sides = [&](MultiPoly p) {
    for (const auto& s : kSides) p = p.substitute(s, side[s]);
    return p.compact();
  };

  // quantities used, closed under dependencies, in canonical order
  std::set<std::string> used;
  std::vector<std::string> todo;
  for (const auto* poly : {&prob.numerator, &prob.denominator})
    for (const auto& v : poly->support()) todo.push_back(v);
  while (!todo.empty()) {
    std::string q = todo.back();
    todo.pop_back();
    if (std::find(kSides.begin(), kSides.end(), q) != kSides.end() || !used.insert(q).second) continue;
    for (const auto& d : dependencies().at(q)) todo.push_back(d);
  }

  std::vector<std::string> vars;
  std::vector<LegendEntry> legend;
  std::vector<MultiPoly> eqs, pos;
  std::vector<std::string> owner;  // quantity an equation defines, "" otherwise
  for (const auto& s : kSides)
    if (side[s] == V(s)) {
      vars.push_back(s);
      legend.push_back({s, meaning(s), ""});
    }
  if (prob.cls == TriangleClass::Right) {
    MultiPoly pyth = subst_sides(P("a^2 + b^2 - c^2"));
    if (!pyth.is_zero()) {
      eqs.push_back(pyth);
      owner.push_back("");
    }
    if (pyth.is_constant() && !pyth.is_zero())
      throw Error(ErrorKind::InvalidArgument, "normalization contradicts the right-angle constraint");
  }
  std::vector<std::string> quantities;
  for (const auto& q : quantity_names())
    if (used.count(q)) {
      quantities.push_back(q);
      vars.push_back(q);
      MultiPoly def = subst_sides(definition(q));
      legend.push_back({q, meaning(q), ""});
      eqs.push_back(std::move(def));
      owner.push_back(q);
    }
  const MultiPoly num = subst_sides(prob.numerator), den = subst_sides(prob.denominator);
  eqs.push_back((num - V(param) * den).compact());
  owner.push_back("");

  // positivity: triangle inequalities (implied for right triangles), sides
  // not already implied by them, quantities
  std::vector<MultiPoly> tri;
  if (prob.cls == TriangleClass::Isosceles) {
    for (const char* t : {"b + c - a", "a + c - b", "a + b - c"}) {
      MultiPoly g = subst_sides(P(t));
      if (g.is_constant()) {
        if (g.constant_term() <= 0) throw Error(ErrorKind::InvalidArgument, "degenerate triangle class");
        continue;
      }
      tri.push_back(g.primitive());
    }
  }
  std::set<std::string> seen;
  auto add_pos = [&](const MultiPoly& g) {
    if (seen.insert(g.to_string()).second) pos.push_back(g);
  };
  std::set<std::string> implied;
  for (const auto& g : tri) {
    add_pos(g);
    if (auto x = implied_positive(g)) implied.insert(*x);
  }
  for (const auto& s : kSides)
    if (side[s] == V(s) && !implied.count(s)) add_pos(V(s));
  for (const auto& q : quantities)
    if (q != "p" && q != "s") add_pos(V(q));  // p, s are sums of sides
  if (nonnegative_coefficients(prob.numerator) && nonnegative_coefficients(prob.denominator))
    add_pos(V(param));

  // eliminate m-free equations linear in a quantity with constant coefficient
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < eqs.size() && !changed; ++i) {
      if (eqs[i].depends_on(param)) continue;
      for (const auto& q : quantities) {
        if (std::find(vars.begin(), vars.end(), q) == vars.end() || eqs[i].degree_in(q) != 1) continue;
        const MultiPoly rest = eqs[i].substitute(q, Rational(0)).compact();
        const MultiPoly coef = (eqs[i] - rest).substitute(q, Rational(1)).compact();
        if (!coef.is_constant()) continue;
        const MultiPoly value = -rest * (Rational(1) / coef.constant_term());
        eqs.erase(eqs.begin() + static_cast<long>(i));
        owner.erase(owner.begin() + static_cast<long>(i));
        for (auto& e : eqs) e = e.substitute(q, value).compact().primitive();
        for (auto& g : pos) g = g.substitute(q, value).compact().primitive();
        vars.erase(std::find(vars.begin(), vars.end(), q));
        legend.erase(std::find_if(legend.begin(), legend.end(), [&](const LegendEntry& l) { return l.variable == q; }));
        changed = true;
        break;
      }
    }
  }
  for (auto& l : legend)
    for (std::size_t i = 0; i < eqs.size(); ++i)
      if (owner[i] == l.variable) l.definition = eqs[i].to_string() + " = 0";

  GeneratedSystem out;
  out.system.parameter = param;
  out.system.bound_vars = vars;
  out.system.equations = eqs;
  out.system.positives = pos;
  out.legend = legend;
  if (eqs.size() != vars.size())
    throw Error(ErrorKind::NonSquareAfterElimination,
                std::to_string(eqs.size()) + " equations in " + std::to_string(vars.size()) +
                    " unknowns after elimination:\n" + out.system.to_string());
  out.system.validate();
  return out;
}

std::map<std::string, double> numeric_quantities(double a, double b, double c) {
  std::map<std::string, double> q{{"a", a}, {"b", b}, {"c", c}};
  q["m_a"] = 0.5 * std::sqrt(2 * b * b + 2 * c * c - a * a);
  q["m_b"] = 0.5 * std::sqrt(2 * a * a + 2 * c * c - b * b);
  q["m_c"] = 0.5 * std::sqrt(2 * a * a + 2 * b * b - c * c);
  q["p"] = a + b + c;
  q["s"] = q["p"] / 2;
  const double s = q["s"];
  q["area"] = std::sqrt(s * (s - a) * (s - b) * (s - c));
  q["r"] = q["area"] / s;
  q["R"] = a * b * c / (4 * q["area"]);
  return q;
}

const std::vector<BuiltinProblem>& builtins() {
  static const std::vector<BuiltinProblem> list{
      {"it-quadratic-ratio", "isosceles, c = 1: (a^2+b^2+c^2)/(a*b+a*c+b*c)",
       make_problem(TriangleClass::Isosceles, "c", "(a^2+b^2+c^2)/(a*b+a*c+b*c)")},
      {"rt-median-perimeter", "right angle at C, a = 1: (m_a+m_b)/(a+b+c)",
       make_problem(TriangleClass::Right, "a", "(m_a+m_b)/(a+b+c)")},
      {"rt-circum-inradius", "right angle at C, c = 1: R/r", make_problem(TriangleClass::Right, "c", "R/r")},
      {"it-median-perimeter", "isosceles, c = 1: (m_a+m_b+m_c)/(a+b+c)",
       make_problem(TriangleClass::Isosceles, "c", "(m_a+m_b+m_c)/(a+b+c)")},
  };
  return list;
}

const BuiltinProblem& builtin(const std::string& name) {
  for (const auto& b : builtins())
    if (b.name == name) return b;
  throw Error(ErrorKind::NotFound, "no builtin problem named '" + name + "'");
}

}  // namespace prf
