#include "support.hpp"

#include "prf/error.hpp"

#include <doctest.h>

using namespace prf;

namespace {

void check_witness(const ParametricSystem& sys, const Rational& m0, const SatVerdict& v) {
  REQUIRE(v.witness.has_value());
  const auto s = specialize(sys, m0);
  for (const auto& e : s.equations) {
    const Interval iv = interval_eval(e, *v.witness);
    CHECK(iv.lo <= 0);
    CHECK(iv.hi >= 0);
  }
  std::map<std::string, double> mid;
  for (const auto& w : *v.witness) mid[w.var] = Rational((w.lo + w.hi) / 2).get_d();
  for (const auto& g : s.positives) CHECK(g.evaluate(mid) > 0);
}

struct Probe {
  std::string file;
  std::vector<Rational> points;
};

std::vector<Probe> acceptance_probes() {
  return {{"it-quadratic.prf", {Rational(1, 2), Rational(1), Rational(11, 10), Rational(3, 2), Rational(3)}},
          {"rt-median-perimeter-raw.prf", {Rational(1, 2), Rational(7, 10), Rational(37, 50), Rational(4, 5)}},
          {"rt-circum-inradius-raw.prf", {Rational(2), Rational(5, 2), Rational(4)}}};
}

}  // namespace

TEST_SUITE("zdsat") {
  TEST_CASE("isosceles quadratic spot checks") {
    const auto s = test::ex1();
    const std::vector<std::pair<Rational, int>> sat{
        {Rational(1), 1}, {Rational(11, 10), 2}, {Rational(6, 5), 1}, {Rational(3, 2), 1}};
    for (const auto& [m0, count] : sat) {
      CAPTURE(to_string(m0));
      const auto v = sat_at_rational(s, m0);
      CHECK(v.sat());
      CHECK(v.count == count);
      check_witness(s, m0, v);
    }
    for (const Rational m0 : {Rational(1, 2), Rational(2), Rational(3)}) {
      CAPTURE(to_string(m0));
      const auto v = sat_at_rational(s, m0);
      CHECK_FALSE(v.sat());
      CHECK(v.count == 0);
      CHECK_FALSE(v.witness.has_value());
    }
  }

  TEST_CASE("witness at 11/10 brackets the smaller admissible root") {
    const auto v = sat_at_rational(test::ex1(), Rational(11, 10));
    REQUIRE(v.witness);
    const double lo = (*v.witness)[0].lo.get_d(), hi = (*v.witness)[0].hi.get_d();
    const double b1 = (11.0 - std::sqrt(31.0)) / 9.0, b2 = (11.0 + std::sqrt(31.0)) / 9.0;
    CHECK(((lo <= b1 && b1 <= hi) || (lo <= b2 && b2 <= hi)));
  }

  TEST_CASE("algebraic parameter values") {
    const auto s = test::ex1();
    const auto sqrt2 = RealAlgebraicNumber::root_of(parse_poly("m^2-2").to_uni("m"), 2);
    const auto v = sat_at_algebraic(s, sqrt2);
    CHECK(v.sat());
    CHECK(v.count == 1);
    const auto rr = test::load_system("rt-circum-inradius.prf");
    const auto edge = RealAlgebraicNumber::root_of(parse_poly("m^2-2*m-1").to_uni("m"), 2);
    CHECK(sat_at(rr, edge).sat());
    const auto below = RealAlgebraicNumber::root_of(parse_poly("m^2-5").to_uni("m"), 2);  // 2.236 < 1+sqrt(2)
    CHECK_FALSE(sat_at(rr, below).sat());
    CHECK(sat_at(rr, CellPoint(Rational(3))).sat());
  }

  TEST_CASE("zero-dimensional solving") {
    const std::vector<std::string> xy{"x", "y"};
    auto v = solve_zero_dimensional(xy, {parse_poly("x^2+y^2-1"), parse_poly("x-y")}, {parse_poly("x")});
    CHECK(v.count == 1);
    v = solve_zero_dimensional(xy, {parse_poly("x^2+y^2-1"), parse_poly("x-y")}, {});
    CHECK(v.count == 2);
    v = solve_zero_dimensional(xy, {parse_poly("x^2+y^2+1"), parse_poly("x-y")}, {});
    CHECK_FALSE(v.sat());
    // A positive-dimensional component inside a condition's zero set is dropped.
    v = solve_zero_dimensional(xy, {parse_poly("x^2-1"), parse_poly("(x-1)*y")}, {parse_poly("1-x")});
    CHECK(v.count == 1);
    CHECK_THROWS_AS(solve_zero_dimensional(xy, {parse_poly("x^2-1"), parse_poly("(x-1)*y")}, {parse_poly("x+2")}),
                    Error);
  }

  TEST_CASE("shape-position invariance under random linear changes") {
    std::mt19937_64 rng(77);
    for (const auto& p : acceptance_probes()) {
      const auto sys = test::load_system(p.file);
      for (int k = 0; k < 5; ++k) {
        const auto changed = test::random_linear_change(sys, rng);
        for (const auto& m0 : p.points) {
          CAPTURE(p.file);
          CAPTURE(to_string(m0));
          const auto a = sat_at_rational(sys, m0), b = sat_at_rational(changed, m0);
          CHECK(a.status == b.status);
          CHECK(a.count == b.count);
        }
      }
    }
  }

  TEST_CASE("numeric oracle never contradicts unsat") {
    std::mt19937_64 rng(3);
    int sat_confirmed = 0, sat_total = 0;
    for (const auto& p : acceptance_probes()) {
      const auto sys = test::load_system(p.file);
      for (const auto& m0 : p.points) {
        CAPTURE(p.file);
        CAPTURE(to_string(m0));
        const auto v = sat_at_rational(sys, m0);
        const bool found = test::numeric_feasible_point(specialize(sys, m0), rng);
        if (!v.sat()) CHECK_FALSE(found);
        else {
          ++sat_total;
          sat_confirmed += found;
        }
      }
    }
    MESSAGE("numeric oracle confirmed " << sat_confirmed << " of " << sat_total << " sat probes");
    CHECK(sat_total > 0);
  }

  TEST_CASE("constancy probes") {
    const auto s = test::ex1();
    const auto counts = count_constancy_probe(s, CellPoint(Rational(1)), CellPoint(Rational(6, 5)), 3);
    CHECK(counts == std::vector<int>{2, 2, 2});
    CHECK_THROWS_AS(count_constancy_probe(s, std::nullopt, std::nullopt, 1), Error);
  }

  TEST_CASE("interval evaluation encloses point values") {
    const MultiPoly p = parse_poly("x^2*y - 3*x + y^3");
    const std::vector<WitnessInterval> box{{"x", Rational(1, 3), Rational(1, 2)}, {"y", Rational(-1), Rational(2)}};
    const Interval iv = interval_eval(p, box);
    for (int i = 0; i <= 10; ++i)
      for (int j = 0; j <= 10; ++j) {
        const Rational x = Rational(1, 3) + Rational(i, 60), y = Rational(-1) + Rational(3 * j, 10);
        const Rational v = p.evaluate({{"x", x}, {"y", y}});
        CHECK(iv.lo <= v);
        CHECK(v <= iv.hi);
      }
  }
}
