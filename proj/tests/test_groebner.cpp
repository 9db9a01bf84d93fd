#include "support.hpp"

#include "prf/error.hpp"
#include "prf/groebner.hpp"

#include <doctest.h>

using namespace prf;

namespace {

void check_s_polynomials_reduce(const GroebnerBasis& g) {
  const auto& b = g.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      CHECK(reduce(s_polynomial(b[i], b[j], g.order()), b, g.order()).is_zero());
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("circle and hyperbola") {
    const Ideal i({parse_poly("x^2+y^2-1"), parse_poly("x*y-1/4")}, {"x", "y"});
    const auto g = buchberger(i, MonomialOrder::lex({"x", "y"}));
    check_s_polynomials_reduce(g);
    CHECK(g.is_zero_dimensional());
    CHECK(g.contains(parse_poly("16*y^4-16*y^2+1")));
    for (const auto& f : i.generators) CHECK(g.contains(f));
  }

  TEST_CASE("cyclic 4") {
    const Ideal i({parse_poly("a+b+c+d"), parse_poly("a*b+b*c+c*d+d*a"), parse_poly("a*b*c+b*c*d+c*d*a+d*a*b"),
                   parse_poly("a*b*c*d-1")},
                  {"a", "b", "c", "d"});
    const auto g = buchberger(i, MonomialOrder::grevlex({"a", "b", "c", "d"}));
    check_s_polynomials_reduce(g);
    CHECK_FALSE(g.is_zero_dimensional());
    for (const auto& f : i.generators) CHECK(g.contains(f));
  }

  TEST_CASE("unit ideal and caps") {
    const Ideal i({parse_poly("x*y-1"), parse_poly("x")}, {"x", "y"});
    CHECK(buchberger(i, MonomialOrder::grevlex({"x", "y"})).is_unit());
    GroebnerCaps caps;
    caps.max_pair_reductions = 1;
    const Ideal hard({parse_poly("a+b+c+d"), parse_poly("a*b+b*c+c*d+d*a"), parse_poly("a*b*c+b*c*d+c*d*a+d*a*b"),
                      parse_poly("a*b*c*d-1")},
                     {"a", "b", "c", "d"});
    try {
      buchberger(hard, MonomialOrder::grevlex({"a", "b", "c", "d"}), caps);
      FAIL("expected the cap to trip");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ResourceBudgetExceeded);
    }
  }

  TEST_CASE("S-polynomials of random ideals reduce to zero") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-3, 3), e(0, 2);
    for (int t = 0; t < 30; ++t) {
      // lex on two variables, grevlex on three: keeps coefficient growth modest
      const bool lex = t % 2;
      const std::vector<std::string> vars = lex ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "z"};
      std::vector<MultiPoly> gens;
      for (int k = 0; k < 3; ++k) {
        MultiPoly p(vars);
        for (int m = 0; m < 3; ++m) {
          MultiPoly term = MultiPoly::constant(Rational(c(rng))) * MultiPoly::variable("x").pow(e(rng)) *
                           MultiPoly::variable("y").pow(e(rng));
          if (!lex) term *= MultiPoly::variable("z").pow(e(rng));
          p += term;
        }
        if (!p.is_zero()) gens.push_back(p.with_vars(merge_vars(vars, p.vars())));
      }
      if (gens.empty()) continue;
      const auto order = lex ? MonomialOrder::lex(vars) : MonomialOrder::grevlex(vars);
      const auto g = buchberger(Ideal(gens, vars), order);
      check_s_polynomials_reduce(g);
      for (const auto& f : gens) CHECK(g.contains(f));
    }
  }

  TEST_CASE("elimination and minimal polynomial") {
    const Ideal i({parse_poly("x^2+y^2-1"), parse_poly("x-y")}, {"x", "y"});
    const auto e = elimination_ideal(i, {"y"});
    REQUIRE(e.size() == 1);
    CHECK(e[0].primitive() == parse_poly("2*y^2-1").with_vars(e[0].vars()));
    const auto g = buchberger(i, MonomialOrder::grevlex({"x", "y"}));
    const auto mp = g.minimal_polynomial(parse_poly("x+y"));
    CHECK(mp == std::vector<Rational>{Rational(-2), Rational(0), Rational(1)});
  }

  TEST_CASE("saturation removes a component") {
    const Ideal i({parse_poly("x*(x-1)"), parse_poly("x*y")}, {"x", "y"});
    const Ideal s = saturate(i, parse_poly("x"));
    const auto g = buchberger(s, MonomialOrder::grevlex({"x", "y"}));
    CHECK(g.contains(parse_poly("x-1")));
    CHECK(g.contains(parse_poly("y")));
  }

  TEST_CASE("fresh variables") {
    CHECK(fresh_variable("t", {"t", "t1"}) != "t");
    CHECK(fresh_variable("t", {"x"}) == "t");
  }
}
