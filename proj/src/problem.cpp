#include "prf/problem.hpp"

#include "prf/error.hpp"
#include "prf/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace prf {

namespace {

std::string trim(const std::string& s, std::size_t& offset) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  offset += b;
  return s.substr(b, e - b);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

GeneratedSystem ProblemFile::system() const {
  if (triangle) return generate(*triangle);
  GeneratedSystem g;
  g.system = raw;
  for (const auto& v : raw.bound_vars) g.legend.push_back({v, "variable", ""});
  return g;
}

ProblemFile parse_problem_file(const std::string& text) {
  ProblemFile out;
  std::optional<TriangleClass> cls;
  std::string side = "c";
  std::optional<std::pair<MultiPoly, MultiPoly>> ratio;
  std::string ratio_text;
  bool have_vars = false;
  std::vector<std::string> seen_vars;
  int triangle_line = 0, raw_line = 0;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t col0 = 0;
    const std::string body = trim(line, col0);
    if (body.empty()) continue;
    const std::size_t colon = body.find(':');
    if (colon == std::string::npos) throw ParseError("expected '<key>: <value>'", lineno, static_cast<int>(col0) + 1);
    std::size_t kc = col0;
    const std::string key = trim(body.substr(0, colon), kc);
    std::size_t vc = col0 + colon + 1;
    const std::string value = trim(body.substr(colon + 1), vc);
    const int vcol = static_cast<int>(vc) + 1;
    const bool triangle_key = key == "class" || key == "normalize" || key == "ratio";
    const bool raw_key = key == "param" || key == "vars" || key == "eq" || key == "pos";
    if (!triangle_key && !raw_key) throw ParseError("unknown key '" + key + "'", lineno, static_cast<int>(kc) + 1);
    if (triangle_key) triangle_line = triangle_line ? triangle_line : lineno;
    if (raw_key) raw_line = raw_line ? raw_line : lineno;
    if (triangle_line && raw_line)
      throw ParseError("triangle keys (class/normalize/ratio) and raw keys (param/vars/eq/pos) cannot be mixed", lineno,
                       static_cast<int>(kc) + 1);
    if (value.empty()) throw ParseError("missing value for '" + key + "'", lineno, vcol);

    if (key == "class") {
      if (value == "isosceles") cls = TriangleClass::Isosceles;
      else if (value == "right") cls = TriangleClass::Right;
      else throw ParseError("class must be 'isosceles' or 'right'", lineno, vcol);
    } else if (key == "normalize") {
      const std::size_t eq = value.find('=');
      std::size_t sc = 0, oc = 0;
      const std::string s = eq == std::string::npos ? "" : trim(value.substr(0, eq), sc);
      const std::string one = eq == std::string::npos ? "" : trim(value.substr(eq + 1), oc);
      if (s != "a" && s != "b" && s != "c") throw ParseError("expected 'a = 1', 'b = 1' or 'c = 1'", lineno, vcol);
      if (one != "1") throw ParseError("only normalization to 1 is supported", lineno, vcol + static_cast<int>(eq + 1 + oc));
      side = s;
    } else if (key == "ratio") {
      ratio = parse_ratio(value, lineno, vcol);
      ratio_text = value;
    } else if (key == "param") {
      if (!is_identifier(value)) throw ParseError("parameter must be an identifier", lineno, vcol);
      out.raw.parameter = value;
    } else if (key == "vars") {
      std::string names = value;
      std::replace(names.begin(), names.end(), ',', ' ');
      std::istringstream vs(names);
      std::string v;
      while (vs >> v) {
        if (!is_identifier(v)) throw ParseError("'" + v + "' is not an identifier", lineno, vcol);
        if (std::find(out.raw.bound_vars.begin(), out.raw.bound_vars.end(), v) != out.raw.bound_vars.end())
          throw ParseError("variable '" + v + "' listed twice", lineno, vcol);
        out.raw.bound_vars.push_back(v);
      }
      have_vars = true;
    } else {
      MultiPoly p = parse_poly(value, lineno, vcol);
      if (key == "eq") {
        if (p.is_zero()) throw ParseError("equation is identically zero", lineno, vcol);
        out.raw.equations.push_back(p);
      } else {
        out.raw.positives.push_back(p);
      }
      for (const auto& v : p.support())
        if (std::find(seen_vars.begin(), seen_vars.end(), v) == seen_vars.end()) seen_vars.push_back(v);
    }
  }

  if (triangle_line) {
    if (!cls) throw ParseError("missing 'class:' line", triangle_line, 1);
    if (!ratio) throw ParseError("missing 'ratio:' line", triangle_line, 1);
    TriangleProblem p;
    p.cls = *cls;
    p.normalized_side = side;
    p.numerator = ratio->first;
    p.denominator = ratio->second;
    p.ratio_text = ratio_text;
    out.triangle = p;
    return out;
  }
  if (out.raw.equations.empty()) throw ParseError("no equations", std::max(lineno, 1), 1);
  if (!have_vars)
    for (const auto& v : seen_vars)
      if (v != out.raw.parameter) out.raw.bound_vars.push_back(v);
  for (const auto& v : seen_vars)
    if (v != out.raw.parameter &&
        std::find(out.raw.bound_vars.begin(), out.raw.bound_vars.end(), v) == out.raw.bound_vars.end())
      throw ParseError("'" + v + "' is neither the parameter nor listed in 'vars:'", raw_line, 1);
  if (std::find(out.raw.bound_vars.begin(), out.raw.bound_vars.end(), out.raw.parameter) != out.raw.bound_vars.end())
    throw ParseError("the parameter '" + out.raw.parameter + "' cannot also be a variable", raw_line, 1);
  return out;
}

ProblemFile load_problem_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_problem_file(ss.str());
}

}  // namespace prf
