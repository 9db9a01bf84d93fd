#include "support.hpp"

#include "cli.hpp"
#include "prf/explore.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace prf;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "prf");
  std::ostringstream out, err;
  const int code = cli::main(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("solve prints the range") {
    const auto r = run({"solve", test::problem_path("it-quadratic.prf")});
    CHECK(r.code == 0);
    CHECK(r.out == "# assuming m > 0\n1 <= m < 2\n");
  }

  TEST_CASE("output is deterministic across runs, seeds and execution modes") {
    const auto a = run({"cells", test::problem_path("it-quadratic.prf")});
    const auto b = run({"cells", test::problem_path("it-quadratic.prf")});
    const auto c = run({"cells", test::problem_path("it-quadratic.prf"), "--serial"});
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    const auto j1 = run({"solve", "--json", test::problem_path("rt-circum-inradius.prf")});
    const auto j2 = run({"solve", "--json", test::problem_path("rt-circum-inradius.prf")});
    CHECK(j1.out == j2.out);
    const auto s0 = run({"solve", test::problem_path("it-quadratic.prf")});
    const auto s5 = run({"solve", "--seed", "5", test::problem_path("it-quadratic.prf")});
    CHECK(s0.out == s5.out);
  }

  TEST_CASE("builtin JSON carries the endpoint polynomial and round-trips") {
    const auto r = run({"builtin", "rt-circum-inradius", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["solution"]["pieces"][0]["lower"]["polynomial"] == "m^2-2*m-1");
    const auto sol = solution_from_json(j["solution"]);
    CHECK(sol.formula() == "m >= 1+sqrt(2)");
    CHECK(to_json(sol) == j["solution"]);
  }

  TEST_CASE("builtin list and text") {
    const auto l = run({"builtin", "--list"});
    CHECK(l.code == 0);
    CHECK(l.out.find("rt-circum-inradius") != std::string::npos);
    const auto r = run({"builtin", "it-quadratic-ratio"});
    CHECK(r.out == "# assuming m > 0\n1 <= m < 2\n");
    CHECK(run({"builtin", "no-such-problem"}).code == 1);
    CHECK(run({"builtin"}).code == 1);
  }

  TEST_CASE("dv and cells") {
    const auto d = run({"dv", test::problem_path("it-quadratic.prf")});
    CHECK(d.code == 0);
    CHECK(d.out.find("O_crit: (m-1)*(m+2)") != std::string::npos);
    CHECK(d.out.find("roots:  -2, 0, 1, 6/5, 2") != std::string::npos);
    const auto dj = run({"dv", "--json", test::problem_path("it-quadratic.prf")});
    CHECK(nlohmann::json::parse(dj.out)["roots"].size() == 5);
    const auto c = run({"cells", "--builtin", "it-quadratic-ratio"});
    CHECK(c.code == 0);
    CHECK(c.out.find("(1, 6/5)") != std::string::npos);
    CHECK(c.out.find("sat 2") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    const std::string empty = "prf_cli_empty.prf", bad = "prf_cli_bad.prf";
    std::ofstream(empty) << "";
    std::ofstream(bad) << "class: right\nratio: x/a\n";
    auto e = run({"solve", empty});
    CHECK(e.code == 1);
    CHECK(e.err.find("no equations") != std::string::npos);
    e = run({"solve", bad});
    CHECK(e.code == 1);
    CHECK(e.err.find("2:8: unknown quantity 'x'") != std::string::npos);
    CHECK(run({"solve", "missing.prf"}).code == 1);
    CHECK(run({"solve"}).code == 1);
    CHECK(run({"solve", test::problem_path("it-quadratic.prf"), "--builtin", "rt-circum-inradius"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"solve", test::problem_path("it-quadratic.prf"), "--caps", "bogus"}).code == 1);
    const auto m = run({"solve", test::problem_path("rt-circum-inradius.prf"), "--caps", "pairs=1"});
    CHECK(m.code == 2);
    CHECK(m.err.find("[dv]") != std::string::npos);
    const auto p = run({"plot", test::problem_path("rt-circum-inradius.prf"), "-o", "prf_cli_never.svg"});
    CHECK(p.code == 2);
    CHECK(p.err.find("[plot]") != std::string::npos);
  }

  TEST_CASE("unsat everywhere is success") {
    const std::string f = "prf_cli_unsat.prf";
    std::ofstream(f) << "vars: b\neq: b^2+m^2+1\n";
    const auto r = run({"solve", f});
    CHECK(r.code == 0);
    CHECK(r.out == "false\n");
  }

  TEST_CASE("caps parsing") {
    const auto c = cli::parse_caps("pairs=10,degree=5,seconds=2.5");
    CHECK(c.max_pair_reductions == 10);
    CHECK(c.max_degree == 5);
    CHECK(c.time_limit_seconds == 2.5);
    CHECK_THROWS(cli::parse_caps("pairs=x"));
    CHECK_THROWS(cli::parse_caps("seconds=0"));
    CHECK_THROWS(cli::parse_caps("color=red"));
  }

  TEST_CASE("plot writes an SVG with heavy feasible arcs") {
    const std::string out = "prf_cli_curve.svg";
    const auto r = run({"plot", test::problem_path("it-quadratic.prf"), "-o", out});
    REQUIRE(r.code == 0);
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    const std::string svg = ss.str();
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("class=\"feasible\"") != std::string::npos);
    CHECK(svg.find("class=\"curve\"") != std::string::npos);
    CHECK(svg.find("class=\"boundary\"") != std::string::npos);
    const auto w = run({"plot", test::problem_path("it-quadratic.prf"), "-o", out, "--window", "0,3,0,6"});
    CHECK(w.code == 0);
    CHECK(run({"plot", test::problem_path("it-quadratic.prf"), "-o", out, "--window", "3,0,0,6"}).code == 1);
  }

  TEST_CASE("svg rendering is deterministic") {
    const auto s = test::ex1();
    const cli::PlotWindow w{0, 3, 0, 6};
    CHECK(cli::render_svg(s, w, {}) == cli::render_svg(s, w, {}));
  }
}
