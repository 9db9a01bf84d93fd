#include "support.hpp"

#include "prf/error.hpp"
#include "prf/realroots.hpp"

#include <doctest.h>

using namespace prf;


TEST_SUITE("realroots") {
  TEST_CASE("isolation of known roots") {
    const auto r = isolate_roots(parse_poly("(m-1)*(m+2)*(5*m-6)*m*(m-2)").to_uni("m"));
    REQUIRE(r.size() == 5);
    CHECK(display(r[0]) == "-2");
    CHECK(display(r[3]) == "6/5");
    CHECK(r[3].is_rational());
    const auto s = isolate_roots(parse_poly("m^2-2*m-1").to_uni("m"));
    REQUIRE(s.size() == 2);
    CHECK(display(s[1]) == "1+sqrt(2)");
    CHECK(s[1].to_decimal(6) == "2.414214");
    CHECK(s[1].root_index() == 2);
  }

  TEST_CASE("rational roots with large coefficients are exact") {
    const auto r = isolate_roots(
        parse_poly("(1234567891*m-987654321)*(m^2-3)*(97*m+1000003)*(m^3-m-7919)").to_uni("m"));
    REQUIRE(r.size() == 5);
    CHECK(r[0].is_rational());
    CHECK(display(r[0]) == "-1000003/97");
    CHECK(!r[1].is_rational());
    CHECK(r[2].is_rational());
    CHECK(r[2].rational_value() == Rational(987654321, 1234567891));
    CHECK(!r[3].is_rational());
    CHECK(!r[4].is_rational());
    CHECK(r[3].root_index() == 4);
  }

  TEST_CASE("biquadratic radical form") {
    const auto r = isolate_roots(parse_poly("4*m^4-60*m^2+25").to_uni("m"));
    REQUIRE(r.size() == 4);
    CHECK(r[2].to_double() > 0.65);
    CHECK(r[2].to_double() < 0.66);
    CHECK(display(r[2]) == "sqrt(5/2*(3-2*sqrt(2)))");
  }

  TEST_CASE("compare, sign_at and rational_between") {
    const auto a = RealAlgebraicNumber::root_of(parse_poly("m^2-2").to_uni("m"), 2);
    const auto b = RealAlgebraicNumber::root_of(parse_poly("m^2-3").to_uni("m"), 2);
    CHECK(a < b);
    CHECK(a == RealAlgebraicNumber::root_of(parse_poly("m^4-4").to_uni("m"), 2));
    CHECK(compare(a, RealAlgebraicNumber(Rational(7, 5))) == std::strong_ordering::greater);
    CHECK(sign_at(parse_poly("m^2-2").to_uni("m"), a) == 0);
    CHECK(sign_at(parse_poly("m-1").to_uni("m"), a) == 1);
    const Rational q = rational_between(a, b);
    CHECK(a < RealAlgebraicNumber(q));
    CHECK(RealAlgebraicNumber(q) < b);
    CHECK(refine(a, Rational(1, 1000000)).upper_bound() - refine(a, Rational(1, 1000000)).lower_bound() <=
          Rational(1, 1000000));
  }

  TEST_CASE("endpoint that is a root") {
    CHECK_THROWS_AS(sturm_count(parse_poly("m^2-1").to_uni("m"), Rational(1), Rational(3)), Error);
  }

  TEST_CASE("Sturm isolation agrees with a numeric root finder on 200 random polynomials") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> deg(1, 8), coef(-9, 9);
    int compared = 0;
    for (int t = 0; t < 200; ++t) {
      const int n = deg(rng);
      std::vector<Rational> c(n + 1);
      for (auto& x : c) x = coef(rng);
      if (c[n] == 0) c[n] = 1;
      const UniPoly p("x", c);
      const auto roots = isolate_roots(p);
      for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1] < roots[i]);
      for (const auto& r : roots) CHECK(sign_at(p, r) == 0);
      std::vector<double> dc;
      for (const auto& x : c) dc.push_back(x.get_d());
      std::vector<double> num;
      if (!test::numeric_real_roots(dc, num)) continue;
      // Numeric roots cluster at multiple roots; compare distinct values.
      std::vector<double> distinct;
      for (double x : num)
        if (distinct.empty() || std::abs(x - distinct.back()) > 1e-4) distinct.push_back(x);
      ++compared;
      REQUIRE(distinct.size() == roots.size());
      for (std::size_t i = 0; i < roots.size(); ++i) CHECK(std::abs(roots[i].to_double() - distinct[i]) < 1e-4);
    }
    CHECK(compared >= 180);
  }
}
