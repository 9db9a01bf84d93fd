#include "support.hpp"

#include "prf/error.hpp"
#include "prf/factor.hpp"

#include <doctest.h>

using namespace prf;

TEST_SUITE("factor") {
  TEST_CASE("known factorizations") {
    const auto f = factor_square_free(parse_poly("m^2+m-2").to_uni("m"));
    REQUIRE(f.size() == 2);
    CHECK(factored_string(parse_poly("m^2+m-2").to_uni("m")) == "(m-1)*(m+2)");
    CHECK(factor_square_free(parse_poly("4*m^4-60*m^2+25").to_uni("m")).size() == 1);
    CHECK(factor_square_free(parse_poly("m^4+4").to_uni("m")).size() == 2);  // Sophie Germain
    CHECK(factor_square_free(parse_poly("m^4-10*m^2+1").to_uni("m")).size() == 1);  // irreducible, splits mod every p
    CHECK(factor_square_free(parse_poly("(m^2-2)^3*(m+1)^2*m").to_uni("m")).size() == 3);
    CHECK(factor_square_free(UniPoly("m", {Rational(5)})).empty());
    CHECK_THROWS_AS(factor_square_free(UniPoly("m")), Error);
  }

  TEST_CASE("products of random factors are recovered") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> deg(1, 3), coef(-6, 6);
    for (int t = 0; t < 40; ++t) {
      UniPoly prod("x", {Rational(1)});
      for (int k = 0, n = 1 + t % 4; k < n; ++k) {
        const int d = deg(rng);
        std::vector<Rational> c(d + 1);
        for (auto& x : c) x = coef(rng);
        c[d] = 1 + std::abs(coef(rng));
        prod *= UniPoly("x", c);
      }
      if (prod.is_constant()) continue;
      const auto fs = factor_square_free(prod);
      UniPoly back("x", {Rational(1)});
      for (const auto& f : fs) {
        CHECK(f.lc() > 0);
        back *= f;
      }
      // Same roots: the square-free part of prod divides back and vice versa.
      const auto r1 = isolate_roots(prod), r2 = isolate_roots(back);
      CHECK(r1.size() == r2.size());
      for (std::size_t i = 0; i < std::min(r1.size(), r2.size()); ++i) CHECK(r1[i] == r2[i]);
      CHECK(back.degree() <= prod.degree());
    }
  }
}
