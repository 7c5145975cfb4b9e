#include <doctest.h>

#include <json.hpp>

#include <gring/cache.hpp>
#include <gring/cli.hpp>
#include <gring/registry.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

using namespace gring;
using nlohmann::json;

namespace {

CheckReport run(const std::string& id, const std::string& expr) {
  return run_check(id, expr, EngineLimits{});
}

struct TempDir {
  std::filesystem::path path;
  TempDir(const char* tag) {
    path = std::filesystem::temp_directory_path() /
           (std::string("gring-test-") + tag + "-" + std::to_string(getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

std::string write_grid(const TempDir& dir, const char* name,
                       const std::string& body) {
  auto p = dir.path / name;
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST_CASE("registry lists stable check ids") {
  const auto& defs = list_registry();
  CHECK(defs.size() >= 27);
  std::set<std::string> ids;
  for (const auto& d : defs) {
    CHECK(ids.insert(d.id).second);  // unique
    CHECK_FALSE(d.statement.empty());
    CHECK((d.mode == "implication" || d.mode == "equivalence" ||
           d.mode == "always"));
  }
  CHECK(ids.count("aug-ideal-nilpotency"));
  CHECK(ids.count("group-ring-never-prime"));
  CHECK(ids.count("normal-orders-nilpotent"));
  CHECK(ids.count("idempotent-split"));

  CHECK_THROWS_AS(run("no-such-check", "Z2[C2]"), std::invalid_argument);
}

TEST_CASE("check verdict semantics") {
  // equivalence holding with a true hypothesis
  auto a = run("aug-ideal-nilpotency", "Z2[C2]");
  CHECK(a.verdict == "confirmed");
  CHECK(a.hypothesis == true);
  CHECK(a.conclusion == true);

  // equivalence holding with both sides false
  auto b = run("aug-ideal-nilpotency", "Z2[S3]");
  CHECK(b.verdict == "confirmed");
  CHECK(b.hypothesis == false);
  CHECK(b.conclusion == false);

  // implication with a false hypothesis is vacuous, even when the
  // conclusion also fails
  auto c = run("p-group-lift", "Z6[C2]");
  CHECK(c.verdict == "vacuous");
  CHECK(c.hypothesis == false);

  // a check that does not apply to the instance at all
  auto d = run("aug-ideal-nilpotency", "Z6");
  CHECK(d.verdict == "vacuous");
  CHECK_FALSE(d.note.empty());
}

TEST_CASE("named witnesses from specific checks") {
  auto split = run("idempotent-split", "Z3[C6]");
  CHECK(split.verdict == "confirmed");
  CHECK(split.note.find("2+2*x^3") != std::string::npos);
  CHECK(run("idempotent-split", "Z2[C2]").verdict == "vacuous");

  auto orders = run("normal-orders-nilpotent", "Z2[S3]");
  CHECK(orders.verdict == "vacuous");  // hypothesis (nilary) is false
  CHECK(orders.hypothesis == false);
  CHECK(orders.conclusion == false);
  CHECK(orders.note.find("order 3") != std::string::npos);

  auto never = run("group-ring-never-prime", "Z2[C2]");
  CHECK(never.verdict == "confirmed");
  CHECK(never.mode == "always");

  auto moduli4 = run("prime-power-moduli", "Z4");
  CHECK(moduli4.verdict == "confirmed");
  CHECK(run("prime-power-moduli", "Z2").verdict == "confirmed");
  CHECK(run("prime-power-moduli", "Z6").verdict == "vacuous");
}

TEST_CASE("grid run aggregates verdicts") {
  GridSpec grid;
  grid.exprs = {"Z2[C2]", "Z3[C3]", "Z2[S3]"};
  auto res = run_grid({"aug-ideal-nilpotency", "group-ring-never-prime",
                       "quotient-group-criterion"},
                      grid);
  CHECK(res.reports.size() == 9);
  CHECK(res.refuted == 0);
  CHECK_FALSE(res.aborted);
  CHECK(res.confirmed + res.vacuous + res.undecided == res.reports.size());
  CHECK(res.confirmed >= 6);

  // reports arrive in instance-major, registration order
  CHECK(res.reports[0].instance == "Z2[C2]");
  CHECK(res.reports[3].instance == "Z3[C3]");

  GridSpec bad;
  bad.exprs = {"Z2[C2"};
  CHECK_THROWS_AS(run_grid({}, bad), ParseError);
}

TEST_CASE("searches over small grids") {
  GridSpec grid;
  grid.exprs = {"Z2[C2]", "Z3[C3]"};

  auto q1 = search_counterexample("question1", grid);
  CHECK(q1.verdict == "vacuous");
  REQUIRE(q1.rows.size() == 2);
  for (const auto& row : q1.rows) CHECK(row.status == "hypothesis-fails");
  CHECK(q1.note.find("prime") != std::string::npos);

  auto q2 = search_counterexample("question2", grid);
  CHECK((q2.verdict == "confirmed" || q2.verdict == "vacuous"));
  CHECK(q2.witness.is_null());

  auto c1 = search_counterexample("conjecture1", grid);
  CHECK(c1.rows.size() == 2);
  for (const auto& row : c1.rows) {
    CHECK((row.status == "confirmed" || row.status == "hypothesis-fails"));
  }

  CHECK_THROWS_AS(search_counterexample("question9", grid),
                  std::invalid_argument);
}

TEST_CASE("result cache round-trips and survives corruption") {
  TempDir dir("cache");
  ResultCache cache(dir.path.string());

  EngineLimits lm;
  std::string key = cache.key("Z2[C2]", "check:nilary", lm);
  CHECK(key.size() == 16);
  CHECK_FALSE(cache.load(key).has_value());

  json value = {{"hello", 1}, {"world", json::array({1, 2, 3})}};
  cache.store(key, value);
  auto hit = cache.load(key);
  REQUIRE(hit.has_value());
  CHECK(*hit == value);

  // different limits change the key
  EngineLimits other = lm;
  other.property_cap = 7;
  CHECK(cache.key("Z2[C2]", "check:nilary", other) != key);

  // corrupt entries are discarded with a warning, not fatal
  std::ostringstream warn;
  ResultCache noisy(dir.path.string(), &warn);
  std::ofstream(dir.path / (key + ".json")) << "{ not json";
  CHECK_FALSE(noisy.load(key).has_value());
  CHECK(warn.str().find("corrupt") != std::string::npos);
}

TEST_CASE("cli: property check") {
  std::ostringstream out, err;
  int rc = cli_run({"check", "Z3[C6]", "--property", "nilary"}, out, err);
  CHECK(rc == 0);
  json j = json::parse(out.str());
  CHECK(j["expr"] == "Z3[C6]");
  CHECK(j["report"]["holds"] == false);
  CHECK(j["report"]["witness"]["kind"] == "ideal-pair");

  // determinism: identical invocations produce identical bytes
  std::ostringstream out2, err2;
  cli_run({"check", "Z3[C6]", "--property", "nilary"}, out2, err2);
  CHECK(out.str() == out2.str());

  // --expect mismatch flips the exit code
  std::ostringstream out3, err3;
  rc = cli_run({"check", "Z3[C6]", "--property", "nilary", "--expect", "true"},
               out3, err3);
  CHECK(rc == 1);

  // explicit ideal argument
  std::ostringstream out4, err4;
  rc = cli_run({"check", "Z4", "--property", "essential", "--ideal", "2"},
               out4, err4);
  CHECK(rc == 0);
  CHECK(json::parse(out4.str())["report"]["holds"] == true);
}

TEST_CASE("cli: diagnostics and exit codes") {
  std::ostringstream out, err;
  CHECK(cli_run({"check", "Z1", "--property", "nilary"}, out, err) == 2);
  CHECK(err.str().find("at offset 0") != std::string::npos);

  std::ostringstream out2, err2;
  CHECK(cli_run({"check", "Z4[", "--property", "nilary"}, out2, err2) == 2);
  CHECK(err2.str().find("at offset 3") != std::string::npos);

  std::ostringstream out3, err3;
  CHECK(cli_run({"check", "Z4", "--property", "bogus"}, out3, err3) == 2);

  std::ostringstream out4, err4;
  CHECK(cli_run({"frobnicate"}, out4, err4) == 2);

  // cap overflow surfaces as exit 3
  std::ostringstream out5, err5;
  CHECK(cli_run({"check", "Z4[D4]", "--property", "nilary"}, out5, err5) == 3);
}

TEST_CASE("cli: registry and info") {
  std::ostringstream out, err;
  CHECK(cli_run({"registry"}, out, err) == 0);
  json j = json::parse(out.str());
  CHECK(j["count"].get<std::size_t>() >= 27);
  CHECK(j["checks"].size() == j["count"].get<std::size_t>());

  std::ostringstream out2, err2;
  CHECK(cli_run({"info", "Z2[S3]"}, out2, err2) == 0);
  json info = json::parse(out2.str());
  CHECK(info["size"] == 64);
  CHECK(info["group"]["order"] == 6);
  CHECK(info["group"]["abelian"] == false);
  CHECK(info["aug_ideal"]["size"] == 32);
}

TEST_CASE("cli: verify and search on a small grid") {
  TempDir dir("grids");
  std::string grid = write_grid(dir, "tiny.grid", R"({
    "exprs": ["Z2[C2]", "Z3[C3]"],
    "caps": {"timeout_per_instance_s": 60}
  })");

  std::ostringstream out, err;
  int rc = cli_run({"verify", "aug-ideal-nilpotency", "quotient-group-criterion",
                    "--grid", grid},
                   out, err);
  CHECK(rc == 0);
  json j = json::parse(out.str());
  CHECK(j["summary"]["refuted"] == 0);
  CHECK(j["reports"].size() == 4);
  for (const auto& rep : j["reports"]) {
    CHECK_FALSE(rep.contains("runtime_ms"));  // only with --timings
  }

  std::ostringstream tout, terr;
  rc = cli_run({"verify", "aug-ideal-nilpotency", "--grid", grid, "--timings"},
               tout, terr);
  CHECK(rc == 0);
  json tj = json::parse(tout.str());
  CHECK(tj["reports"][0].contains("runtime_ms"));

  std::ostringstream sout, serr;
  rc = cli_run({"search", "question2", "--grid", grid}, sout, serr);
  CHECK(rc == 0);
  json sj = json::parse(sout.str());
  CHECK(sj["target"] == "question2");
  CHECK(sj["instances"].size() == 2);

  // cached rerun is byte-identical to the first run
  std::string cdir = (dir.path / "cache").string();
  std::ostringstream c1, e1, c2, e2;
  CHECK(cli_run({"--cache", cdir, "verify", "aug-ideal-nilpotency", "--grid",
                 grid},
                c1, e1) == 0);
  CHECK(cli_run({"--cache", cdir, "verify", "aug-ideal-nilpotency", "--grid",
                 grid},
                c2, e2) == 0);
  CHECK(c1.str() == c2.str());

  std::ostringstream mout, merr;
  CHECK(cli_run({"verify", "--grid", "/nope.grid"}, mout, merr) == 2);
}

TEST_CASE("cli: output file") {
  TempDir dir("out");
  std::string path = (dir.path / "result.json").string();
  std::ostringstream out, err;
  int rc = cli_run({"--out", path, "check", "Z6", "--property", "prime"}, out,
                   err);
  CHECK(rc == 0);
  CHECK(out.str().empty());
  std::ifstream in(path);
  REQUIRE(in.is_open());
  json j = json::parse(in);
  CHECK(j["report"]["holds"] == false);
}
