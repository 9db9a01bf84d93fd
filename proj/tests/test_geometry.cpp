#include "support.hpp"

#include "prf/error.hpp"
#include "prf/geometry.hpp"

#include <doctest.h>

using namespace prf;

namespace {

/// Sides of a random triangle of the class with the normalized side = 1.
std::array<double, 3> random_triangle(const TriangleProblem& p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 0.95);
  double a, b, c;
  if (p.cls == TriangleClass::Isosceles) {
    // a = b; the free side is scaled so that the normalized side is 1.
    const double base = u(rng) * 1.9;  // c / a in (0, 2)
    a = b = 1;
    c = base;
  } else {
    const double t = u(rng) * M_PI / 2;
    a = std::cos(t);
    b = std::sin(t);
    c = 1;
  }
  const double scale = p.normalized_side == "a" ? a : p.normalized_side == "b" ? b : c;
  return {a / scale, b / scale, c / scale};
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("generated systems are satisfied by actual triangles") {
    std::mt19937_64 rng(8);
    for (const auto& bp : builtins()) {
      CAPTURE(bp.name);
      const auto g = generate(bp.problem);
      const auto& sys = g.system;
      CHECK(sys.is_square());
      CHECK_NOTHROW(sys.validate());
      for (int t = 0; t < 25; ++t) {
        const auto [a, b, c] = random_triangle(bp.problem, rng);
        auto q = numeric_quantities(a, b, c);
        const double m = bp.problem.numerator.evaluate(q) / bp.problem.denominator.evaluate(q);
        q[sys.parameter] = m;
        for (const auto& e : sys.equations) {
          double scale = 1;
          for (const auto& [ex, co] : e.terms()) scale = std::max(scale, std::abs(co.get_d()));
          CHECK(std::abs(e.evaluate(q)) < 1e-8 * scale * 100);
        }
        for (const auto& pos : sys.positives) CHECK(pos.evaluate(q) > 0);
      }
    }
  }

  TEST_CASE("legend describes every bound variable") {
    for (const auto& bp : builtins()) {
      const auto g = generate(bp.problem);
      REQUIRE(g.legend.size() == g.system.bound_vars.size());
      for (std::size_t i = 0; i < g.legend.size(); ++i) {
        CHECK(g.legend[i].variable == g.system.bound_vars[i]);
        CHECK_FALSE(g.legend[i].meaning.empty());
      }
    }
  }

  TEST_CASE("isosceles quadratic ratio generates the expected system") {
    const auto g = generate(builtin("it-quadratic-ratio").problem);
    REQUIRE(g.system.equations.size() == 1);
    const MultiPoly expected = parse_poly("(1+2*b^2) - m*(b^2+2*b)");
    CHECK(g.system.equations[0].with_vars(expected.vars()) == expected);
    std::vector<std::string> pos;
    for (const auto& p : g.system.positives) pos.push_back(p.to_string());
    CHECK(std::find(pos.begin(), pos.end(), "2*b-1") != pos.end());
    CHECK(std::find(pos.begin(), pos.end(), "m") != pos.end());
  }

  TEST_CASE("ratio parsing") {
    const auto [n, d] = parse_ratio("(m_a+m_b)/(a+b+c)");
    CHECK(n == parse_poly("m_a+m_b"));
    CHECK(d == parse_poly("a+b+c"));
    const auto [n2, d2] = parse_ratio("R/r");
    CHECK(n2 == parse_poly("R"));
    CHECK(d2 == parse_poly("r"));
    const auto [n3, d3] = parse_ratio("a/(b/c)");
    CHECK(n3 * d2 == n3 * d2);
    CHECK((n3 * parse_poly("b") - d3 * parse_poly("a*c")).is_zero());
    try {
      parse_ratio("x/a", 4, 8);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownQuantity);
      CHECK(std::string(e.what()).find("4:8") == 0);
    }
    CHECK_THROWS_AS(parse_ratio("a/"), ParseError);
  }

  TEST_CASE("builtins") {
    CHECK(builtins().size() >= 3);
    CHECK(builtin("rt-circum-inradius").problem.cls == TriangleClass::Right);
    CHECK_THROWS_AS(builtin("nope"), Error);
    const auto q = numeric_quantities(3, 4, 5);
    CHECK(q.at("area") == doctest::Approx(6));
    CHECK(q.at("r") == doctest::Approx(1));
    CHECK(q.at("R") == doctest::Approx(2.5));
    CHECK(q.at("m_c") == doctest::Approx(2.5));
  }
}
