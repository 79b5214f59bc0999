#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "stationary/cli/commands.hpp"
#include "stationary/testkit.hpp"
#include "temp_dir.hpp"

using Json = nlohmann::json;
using namespace stationary;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;

  [[nodiscard]] Json report() const { return Json::parse(out); }
  [[nodiscard]] Json diagnostic() const { return Json::parse(err); }
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Files {
  TempDir dir{"cli"};
  std::string two = dir.write("two.csv", "0.7,0.3\n0.6,0.4\n").string();
  std::string swap = dir.write("swap.json", R"({"n":2,"rows":[[0,1],[1,0]]})").string();
  std::string id2 = dir.write("id2.csv", "1,0\n0,1\n").string();
  std::string cycle3 = dir.write("cycle3.csv", "0,1,0\n0,0,1\n1,0,0\n").string();
  std::string negative = dir.write("neg.csv", "1.1,-0.1\n0.5,0.5\n").string();
  std::string off_sum = dir.write("off.csv", "0.5,0.4\n0.5,0.5\n").string();
  std::string ragged = dir.write("ragged.csv", "1\n0.5,0.5\n").string();
  std::string garbage = dir.write("garbage.csv", "a,b\n").string();
};

}  // namespace

TEST_CASE("validate") {
  const Files f;
  auto ok = invoke({"validate", f.two});
  CHECK(ok.code == 0);
  CHECK(ok.report()["command"] == "validate");
  CHECK(ok.report()["n"] == 2);
  CHECK(ok.report().contains("elapsed_ms"));

  auto neg = invoke({"validate", f.negative});
  CHECK(neg.code == 2);
  CHECK(neg.out.empty());
  CHECK(neg.diagnostic()["error"] == "NegativeEntry");
  CHECK(neg.diagnostic()["i"] == 0);
  CHECK(neg.diagnostic()["j"] == 1);

  auto off = invoke({"validate", f.off_sum});
  CHECK(off.code == 2);
  CHECK(off.diagnostic()["error"] == "RowSumViolation");
  CHECK(off.diagnostic()["row"] == 0);

  // Renormalization only rescues rows already within tolerance.
  CHECK(invoke({"validate", f.off_sum, "--renormalize"}).code == 2);
  auto renorm = invoke({"validate", f.off_sum, "--renormalize", "--tol", "0.2"});
  CHECK(renorm.code == 0);
  CHECK(renorm.report()["renormalized"] == true);

  CHECK(invoke({"validate", f.off_sum, "--tol", "0.2"}).code == 0);
  CHECK(invoke({"validate", f.ragged}).diagnostic()["error"] == "NotSquare");
  CHECK(invoke({"validate", f.garbage}).code == 5);
  CHECK(invoke({"validate", f.dir.file("missing.csv").string()}).code == 5);
}

TEST_CASE("check") {
  const Files f;
  auto id = invoke({"check", f.id2});
  CHECK(id.code == 3);
  CHECK(id.report()["irreducible"] == false);
  CHECK(id.report()["witness"] == Json::array({0, 1}));

  auto swap = invoke({"check", f.swap});
  CHECK(swap.code == 0);
  CHECK(swap.report()["irreducible"] == true);
  CHECK_FALSE(swap.report().contains("min_powers"));

  auto full = invoke({"check", f.cycle3, "--full"});
  CHECK(full.code == 0);
  CHECK(full.report()["min_powers"] == Json::parse("[[3,1,2],[2,3,1],[1,2,3]]"));
}

TEST_CASE("solve") {
  const Files f;
  for (const char* method : {"direct", "cesaro"}) {
    auto r = invoke({"solve", f.swap, "--method", method});
    CHECK(r.code == 0);
    CHECK(r.report()["method"] == method);
    CHECK(r.report()["pi"] == Json::array({0.5, 0.5}));
  }

  auto both = invoke({"solve", f.two, "--method", "both"});
  REQUIRE(both.code == 0);
  const auto rep = both.report();
  CHECK(rep["distance"].get<double>() <= 1e-6);
  CHECK(rep["direct"]["kernel_dimension"] == 1);
  CHECK(rep["cesaro"]["residual"].get<double>() <= 1e-10);
  double sum = 0.0;
  for (const auto& x : rep["direct"]["pi"]) sum += x.get<double>();
  CHECK(std::abs(sum - 1.0) <= 1e-9);

  auto id = invoke({"solve", f.id2});
  CHECK(id.code == 4);
  CHECK(id.report()["kernel_dimension"] == 2);
  CHECK(id.diagnostic()["error"] == "NotUniqueStationary");

  CHECK(invoke({"solve", f.id2, "--method", "cesaro"}).code == 3);

  auto capped = invoke({"solve", f.two, "--method", "cesaro", "--max-iter", "10"});
  CHECK(capped.code == 4);
  CHECK(capped.diagnostic()["error"] == "MaxIterationsExceeded");

  CHECK(invoke({"solve", f.two, "--positivity-tol", "0.5"}).code == 4);
  CHECK(invoke({"solve", f.two, "--method", "power"}).code == 5);
}

TEST_CASE("simulate") {
  const Files f;
  auto id = invoke({"simulate", f.id2, "--steps", "100", "--seed", "9"});
  CHECK(id.code == 0);
  CHECK(id.report()["counts"] == Json::array({100, 0}));
  CHECK(id.report()["seed"] == 9);

  auto swap = invoke({"simulate", f.swap, "--steps", "100"});
  CHECK(swap.report()["counts"] == Json::array({50, 50}));

  auto cmp = invoke({"simulate", f.two, "--compare"});
  REQUIRE(cmp.code == 0);
  CHECK(cmp.report()["steps"] == 1000000);
  CHECK(cmp.report()["distance"].get<double>() <= 0.01);

  CHECK(invoke({"simulate", f.id2, "--compare"}).code == 3);
  CHECK(invoke({"simulate", f.two, "--start", "2"}).code == 2);
  CHECK(invoke({"simulate", f.two, "--steps", "0"}).code == 5);
}

TEST_CASE("simulate honours the seed environment variable") {
  const Files f;
  const std::vector<std::string> args{"--reproducible", "simulate", f.two, "--steps", "1000"};
  ::unsetenv(cli::kSeedEnvVar);
  const auto fallback = invoke(args);
  CHECK(fallback.report()["seed"] == 20231017);

  ::setenv(cli::kSeedEnvVar, "12345", 1);
  const auto a = invoke(args);
  const auto b = invoke(args);
  CHECK(a.report()["seed"] == 12345);
  CHECK(a.out == b.out);
  CHECK(invoke({"simulate", f.two, "--steps", "1000", "--seed", "7"}).report()["seed"] == 7);

  ::setenv(cli::kSeedEnvVar, "not-a-number", 1);
  CHECK(invoke(args).code == 5);
  ::unsetenv(cli::kSeedEnvVar);
}

TEST_CASE("generate round trips through validate and check") {
  const TempDir dir("cli-gen");
  for (auto kind : testkit::all_fixture_kinds()) {
    for (const char* ext : {".json", ".csv"}) {
      const auto name = std::string(testkit::to_string(kind));
      const auto out = dir.file(name + ext).string();
      auto g = invoke({"generate", "--kind", name, "--n", "6", "--seed", "4", "--out", out,
                       "--coupling", "0.001"});
      REQUIRE(g.code == 0);
      CHECK(g.report()["kind"] == name);
      CHECK(invoke({"validate", out}).code == 0);
      CHECK(invoke({"check", out}).code == (kind == testkit::FixtureKind::reducible_blocks ? 3 : 0));
    }
  }
  CHECK(invoke({"generate", "--kind", "banded", "--n", "3", "--out", dir.file("x.csv").string()}).code == 2);
  CHECK(invoke({"generate", "--kind", "cycle", "--n", "0", "--out", dir.file("x.csv").string()}).code == 2);
  CHECK(invoke({"generate", "--kind", "cycle", "--n", "3", "--out", "/nonexistent/dir/x.csv"}).code == 5);
}

TEST_CASE("reports are single JSON lines with command and elapsed_ms") {
  const Files f;
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"validate", f.two}, {"check", f.two}, {"solve", f.two},
           {"simulate", f.two, "--steps", "10"}, {"check", f.id2}}) {
    const auto r = invoke(args);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
    const auto rep = r.report();
    CHECK(rep["command"] == args[0]);
    CHECK(rep["elapsed_ms"].is_number());
  }
  CHECK(invoke({"--reproducible", "validate", f.two}).report()["elapsed_ms"] == 0);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 5);
  CHECK(invoke({"frobnicate"}).code == 5);
  CHECK(invoke({"validate"}).code == 5);
  CHECK(invoke({"--help"}).code == 0);
}
