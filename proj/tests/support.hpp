#pragma once

#include "prf/dv.hpp"
#include "prf/parse.hpp"
#include "prf/problem.hpp"
#include "prf/zdsat.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace prf::test {

inline std::string problem_path(const std::string& name) { return std::string(PRF_PROBLEMS_DIR) + "/" + name; }

inline ParametricSystem load_system(const std::string& name) {
  return load_problem_file(problem_path(name)).system().system;
}

/// Isosceles quadratic ratio, c = 1.
inline ParametricSystem ex1() {
  ParametricSystem s;
  s.bound_vars = {"b"};
  s.equations = {parse_poly("(1+2*b^2) - m*(b^2+2*b)")};
  s.positives = {parse_poly("2*b-1"), parse_poly("m")};
  return s;
}

inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long den = 997) {
  std::uniform_int_distribution<long> d(lo * den, hi * den);
  Rational q(d(rng), den);
  q.canonicalize();
  return q;
}

/// x_i = y_i + sum_{j<i} c_ij y_j + shift_i composed with a random
/// permutation: invertible over Q.
inline ParametricSystem random_linear_change(const ParametricSystem& s, std::mt19937_64& rng) {
  const std::size_t n = s.bound_vars.size();
  std::uniform_int_distribution<int> coef(-2, 2), shift(-1, 1);
  std::vector<std::string> ys;
  for (std::size_t i = 0; i < n; ++i) ys.push_back("y" + std::to_string(i));
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<MultiPoly> subs;
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly e = MultiPoly::variable(ys[perm[i]]) + MultiPoly::constant(Rational(shift(rng)));
    for (std::size_t j = 0; j < i; ++j) e += MultiPoly::variable(ys[perm[j]]) * Rational(coef(rng));
    subs.push_back(e);
  }
  ParametricSystem t = s;
  t.bound_vars = ys;
  auto apply = [&](MultiPoly p) {
    for (std::size_t i = 0; i < n; ++i) p = p.substitute(s.bound_vars[i], subs[i]);
    return p.compact();
  };
  for (auto& e : t.equations) e = apply(e);
  for (auto& g : t.positives) g = apply(g);
  return t;
}

/// Damped Newton from random starts on the specialized square system. Returns
/// true if some converged point satisfies every condition with margin.
inline bool numeric_feasible_point(const SpecializedSystem& s, std::mt19937_64& rng, int starts = 200) {
  const std::size_t n = s.vars.size();
  std::vector<std::vector<MultiPoly>> jac(n, std::vector<MultiPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) jac[i][j] = s.equations[i].derivative(s.vars[j]);
  std::uniform_real_distribution<double> start(-3, 3);
  for (int k = 0; k < starts; ++k) {
    std::map<std::string, double> x;
    for (const auto& v : s.vars) x[v] = start(rng);
    for (int it = 0; it < 60; ++it) {
      std::vector<std::vector<double>> a(n, std::vector<double>(n + 1));
      double norm = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = jac[i][j].evaluate(x);
        a[i][n] = -s.equations[i].evaluate(x);
        norm += a[i][n] * a[i][n];
      }
      if (norm < 1e-24) break;
      bool singular = false;
      for (std::size_t c = 0; c < n && !singular; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
          if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        if (std::abs(a[p][c]) < 1e-14) singular = true;
        std::swap(a[p], a[c]);
        for (std::size_t r = 0; r < n && !singular; ++r) {
          if (r == c) continue;
          const double f = a[r][c] / a[c][c];
          for (std::size_t q = c; q <= n; ++q) a[r][q] -= f * a[c][q];
        }
      }
      if (singular) break;
      double step = 0;
      for (std::size_t i = 0; i < n; ++i) step = std::max(step, std::abs(a[i][n] / a[i][i]));
      const double damp = step > 1 ? 1 / step : 1;
      for (std::size_t i = 0; i < n; ++i) x[s.vars[i]] += damp * a[i][n] / a[i][i];
    }
    double res = 0;
    for (const auto& e : s.equations) res = std::max(res, std::abs(e.evaluate(x)));
    if (!(res < 1e-9)) continue;
    bool ok = true;
    for (const auto& g : s.positives) ok = ok && g.evaluate(x) > 1e-6;
    if (ok) return true;
  }
  return false;
}

/// Aberth-Ehrlich simultaneous iteration; real roots are those with a tiny
/// imaginary part. Returns false when some root is in the ambiguous band.
inline bool numeric_real_roots(const std::vector<double>& c, std::vector<double>& real) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<std::complex<double>> z(n);
  for (int k = 0; k < n; ++k) z[k] = std::polar(1.3, 2 * M_PI * k / n + 0.4);
  auto eval = [&](std::complex<double> x, std::complex<double>& d) {
    std::complex<double> p = c[n];
    d = 0;
    for (int i = n - 1; i >= 0; --i) {
      d = d * x + p;
      p = p * x + c[i];
    }
    return p;
  };
  for (int it = 0; it < 500; ++it) {
    double move = 0;
    for (int k = 0; k < n; ++k) {
      std::complex<double> d;
      const auto p = eval(z[k], d);
      const auto ratio = p / d;
      std::complex<double> s = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) s += 1.0 / (z[k] - z[j]);
      const auto w = ratio / (1.0 - ratio * s);
      z[k] -= w;
      move = std::max(move, std::abs(w));
    }
    if (move < 1e-15) break;
  }
  real.clear();
  for (const auto& r : z) {
    const double im = std::abs(r.imag()), scale = std::max(1.0, std::abs(r));
    if (im < 1e-9 * scale) real.push_back(r.real());
    else if (im < 1e-4 * scale) return false;
  }
  std::sort(real.begin(), real.end());
  return true;
}

}  // namespace prf::test
