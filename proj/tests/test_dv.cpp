#include "support.hpp"

#include "prf/error.hpp"
#include "prf/realroots.hpp"

#include <doctest.h>

using namespace prf;

namespace {

std::vector<std::string> roots_of(const std::vector<UniPoly>& fam) {
  UniPoly prod("m", {Rational(1)});
  for (const auto& p : fam) prod *= p;
  std::vector<std::string> out;
  if (prod.is_constant()) return out;
  for (const auto& r : isolate_roots(prod)) out.push_back(display(r));
  return out;
}

}  // namespace

TEST_SUITE("dv") {
  TEST_CASE("isosceles quadratic families") {
    const auto s = test::ex1();
    CHECK(roots_of(o_crit(s)) == std::vector<std::string>{"-2", "1"});
    CHECK(roots_of(o_in(s)) == std::vector<std::string>{"0", "6/5"});
    const auto inf = roots_of(o_inf(s));
    CHECK(std::find(inf.begin(), inf.end(), "2") != inf.end());
    const auto dv = discriminant_variety(s);
    const auto all = roots_of({dv.combined});
    for (const char* r : {"-2", "0", "1", "6/5", "2"}) CHECK(std::find(all.begin(), all.end(), r) != all.end());
  }

  TEST_CASE("serial and parallel agree") {
    const auto s = test::load_system("rt-circum-inradius.prf");
    const auto a = discriminant_variety(s, {}, Execution::Serial);
    const auto b = discriminant_variety(s, {}, Execution::Parallel);
    CHECK(a.combined == b.combined);
    CHECK(a.crit == b.crit);
  }

  TEST_CASE("system validation") {
    ParametricSystem s = test::ex1();
    s.bound_vars.push_back("c");
    CHECK_THROWS_AS(s.require_square(), Error);
    ParametricSystem t = test::ex1();
    t.bound_vars = {"m"};
    CHECK_THROWS_AS(t.validate(), Error);
    ParametricSystem u = test::ex1();
    u.equations.push_back(parse_poly("z-1"));
    CHECK_THROWS_AS(u.validate(), Error);
  }

  TEST_CASE("parameter conditions") {
    const auto s = test::ex1();
    REQUIRE(s.parameter_conditions().size() == 1);
    CHECK(s.parameter_conditions()[0].to_string() == "m");
    CHECK(s.bound_conditions().size() == 1);
  }
}
