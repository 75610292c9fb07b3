#include "hqft/cli.hpp"
#include "hqft/io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <sstream>

using test_support::data;
using test_support::test_data;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = hqft::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("homology and cohomology commands") {
  CHECK(run({"homology", "--complex", data("torus.json"), "--degree", "1"}).out == "Z^2\n");
  CHECK(run({"homology", "--complex", data("rp2.json")}).out == "Z/2\n");
  CHECK(run({"homology", "--complex", data("wedge.json"), "--degree", "2"}).out == "Z\n");
  CHECK(run({"cohomology", "--complex", data("rp2.json"), "--group", "z/2"}).out == "Z/2\n");
  const auto j = nlohmann::json::parse(run({"homology", "--complex", data("torus.json"), "--json"}).out);
  CHECK(j["rank"] == 2);
  CHECK(run({"ext", "--complex", data("wedge.json"), "--group", "z/4"}).out == "Z/2\n");
  const auto snf = run({"snf", "--complex", data("rp2.json"), "--degree", "2"});
  CHECK(snf.code == 0);
  CHECK(snf.out.find("rank: 10\n") != std::string::npos);
  CHECK(snf.out.find(" 1 2\n") != std::string::npos);
}

TEST_CASE("holonomy, character and evaluation") {
  const auto h = run({"holonomy", "--complex", data("torus.json"), "--cochain", data("torus_theta.json"), "--surface",
                      data("torus_surface.json")});
  CHECK(h.code == 0);
  CHECK(h.out == "1/3\n");
  CHECK(run({"character", "--complex", data("torus.json"), "--cochain", data("torus_theta.json")}).out == "g0: 1/3\n");
  const auto e = run({"evaluate", "--complex", data("torus.json"), "--cochain", data("torus_theta.json"), "--surface",
                      data("torus_cylinder.json"), "--phase", "1/5", "--debug-selfcheck"});
  CHECK(e.code == 0);
  CHECK(e.out.rfind("phase: 1/5\n", 0) == 0);
}

TEST_CASE("surface commands") {
  const auto v = run({"verify-surface", "--complex", data("torus.json"), "--surface", data("torus_surface.json")});
  CHECK(v.code == 0);
  CHECK(v.out.find("genus: 1") != std::string::npos);
  const auto s = run({"surface-from-cycle", "--complex", data("torus.json"), "--chain", data("torus_fundamental.json"),
                      "--json"});
  REQUIRE(s.code == 0);
  const auto bundle = nlohmann::json::parse(s.out);
  const auto T = hqft::io::load_complex(data("torus.json"));
  const auto g = hqft::io::surface_from_json(bundle, T, ".");
  CHECK(g.pushed_cycle() == hqft::io::chain_from_json(hqft::io::read_json_file(data("torus_fundamental.json")), *T));
}

TEST_CASE("verification suites report and exit") {
  const auto r = run({"verify", "thm71", "--complex", data("rp2.json"), "--group", "z/2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("status: pass") != std::string::npos);
  const auto j = run({"verify", "q/z", "--complex", data("rp2.json"), "--json"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["status"] == "pass");
  CHECK(run({"verify", "linalg"}).code == 0);
  CHECK(run({"verify", "nonsense"}).code == 1);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify", "hqft", "--complex", data("torus.json"), "--group", "z/6"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("errors map to exit codes") {
  const auto nc = run({"holonomy", "--complex", data("ball.json"), "--cochain", test_data("ball_not_cocycle.json"),
                       "--surface", test_data("ball_surface.json")});
  CHECK(nc.code == 2);
  CHECK(nc.err.find("not a cocycle") != std::string::npos);
  CHECK(nc.err.find("(0,1,2,3)") != std::string::npos);

  const auto missing = run({"surface-from-cycle", "--complex", data("torus.json"), "--chain",
                            test_data("torus_missing_simplex.json")});
  CHECK(missing.code == 3);
  CHECK(missing.err.find("(0,1,2)") != std::string::npos);

  const auto sheets = run({"verify-surface", "--complex", data("torus.json"), "--surface", test_data("three_sheets.json")});
  CHECK(sheets.code == 2);
  CHECK(sheets.err.find("edge (0,1)") != std::string::npos);

  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"homology"}).code == 1);
  CHECK(run({"homology", "--complex", "/nonexistent.json"}).code == 3);
  CHECK(run({"cohomology", "--complex", data("rp2.json"), "--group", "q/z"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
