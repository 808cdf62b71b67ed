// End-to-end tests driving the gvkit binary through a shell, checking exit
// codes, byte-level determinism, and the error protocol.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("gvkit-cli-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  REQUIRE(f.good());
  f << text;
}

// Runs `env gvkit args` with stdout/stderr captured to files.
RunResult run(const std::string& args, const std::string& env = "") {
  fs::path out = work_dir() / "stdout.txt";
  fs::path err = work_dir() / "stderr.txt";
  std::string cmd = env + (env.empty() ? "" : " ") + "'" GVKIT_CLI_PATH "' " +
                    args + " > '" + out.string() + "' 2> '" + err.string() +
                    "'";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return RunResult{WEXITSTATUS(status), slurp(out), slurp(err)};
}

json error_kind(const RunResult& r) {
  json e = json::parse(r.err);
  return e["error"]["kind"];
}

}  // namespace

TEST_CASE("elem produces a deterministic artifact") {
  RunResult a = run("elem --genus 2 --qdeg 3 --backend q");
  REQUIRE(a.exit_code == 0);
  CHECK(a.err.empty());
  json j = json::parse(a.out);
  CHECK(j["series"] == "z");
  CHECK(j["genus"] == 2);
  CHECK(j["coeffs"].size() == 4);
  CHECK(j["coeffs"][1]["poly"]["0"] == "2");
  CHECK(j["coeffs"][1]["poly"]["1"] == "-1");

  RunResult b = run("elem --genus 2 --qdeg 3 --backend q");
  CHECK(b.exit_code == 0);
  CHECK(b.out == a.out);  // byte-identical reruns

  // threading must not change the bytes either
  RunResult c = run("elem --genus 2 --qdeg 3 --backend q", "GVKIT_THREADS=2");
  CHECK(c.exit_code == 0);
  CHECK(c.out == a.out);
}

TEST_CASE("--out writes the same bytes to a file") {
  fs::path f = work_dir() / "elem.json";
  RunResult direct = run("elem --genus 1 --qdeg 4");
  RunResult filed = run("elem --genus 1 --qdeg 4 --out '" + f.string() + "'");
  REQUIRE(filed.exit_code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(f) == direct.out);
}

TEST_CASE("elem on the t backend records its order") {
  RunResult r = run("elem --genus 0 --qdeg 2 --backend t --torder 8 --log");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["series"] == "gw");
  CHECK(j["backend"] == "t");
  CHECK(j["t_order"] == 8);
}

TEST_CASE("check reports the genus-1 law") {
  RunResult r = run("check --genus 1 --qdeg 6");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["violations"].empty());
  CHECK(j["support"].size() == 6);

  RunResult q = run("--quiet check --genus 1 --qdeg 6");
  CHECK(q.exit_code == 0);
  CHECK(q.out.empty());
}

TEST_CASE("solve reproduces the stored fixture byte for byte") {
  std::string in = std::string(GVKIT_FIXTURE_DIR) + "/solve_input.json";
  RunResult r = run("solve --in '" + in + "' --torder 8");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == slurp(fs::path(GVKIT_FIXTURE_DIR) / "solve_expected.json"));
}

TEST_CASE("solve flags non-integer counts with exit 1") {
  fs::path in = work_dir() / "half.json";
  spit(in, R"({
  "rank": 1,
  "area_weights": ["1"],
  "energy": "1",
  "genus_max": 0,
  "terms": [{"class": [1], "genus": 0, "coeff": "1/2"}]
})");
  RunResult r = run("solve --in '" + in.string() + "' --torder 2");
  CHECK(r.exit_code == 1);
  json j = json::parse(r.out);
  CHECK(j["integral"] == false);
  CHECK(j["violations"].size() == 2);  // the count and its assembled image

  RunResult q = run("--quiet solve --in '" + in.string() + "' --torder 2");
  CHECK(q.exit_code == 1);  // exit code survives --quiet
  CHECK(q.out.empty());
}

TEST_CASE("bps forward and inverse round trip through files") {
  fs::path n_path = work_dir() / "n.json";
  spit(n_path, R"({
  "rank": 1,
  "area_weights": ["1"],
  "energy": "3",
  "h_max": 1,
  "terms": [
    {"class": [1], "h": 0, "coeff": "1"},
    {"class": [1], "h": 1, "coeff": "2"},
    {"class": [3], "h": 1, "coeff": "-4"}
  ]
})");
  fs::path gw_path = work_dir() / "gw.json";
  RunResult fwd = run("bps --in '" + n_path.string() + "' --torder 8 --out '" +
                      gw_path.string() + "'");
  REQUIRE(fwd.exit_code == 0);
  json gw = json::parse(slurp(gw_path));
  CHECK(gw["genus_max"] == 1);
  CHECK(gw["energy"] == "3");

  RunResult inv =
      run("bps --in '" + gw_path.string() + "' --invert --torder 8");
  REQUIRE(inv.exit_code == 0);
  CHECK(json::parse(inv.out) == json::parse(slurp(n_path)));

  RunResult inv2 =
      run("bps --in '" + gw_path.string() + "' --invert --torder 8");
  CHECK(inv2.out == inv.out);
}

TEST_CASE("fano splits off the Calabi-Yau part and transforms the rest") {
  fs::path in = work_dir() / "fano.json";
  spit(in, R"({
  "rank": 1,
  "area_weights": ["1"],
  "energy": "1",
  "genus_max": 1,
  "terms": [
    {"class": [1], "genus": 0, "coeff": "5"},
    {"class": [1], "genus": 1, "coeff": "-1/24"}
  ],
  "chern": [3],
  "insertions": [2, 2]
})");
  RunResult r = run("fano --in '" + in.string() + "' --torder 8");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["chern"] == json::array({3}));
  CHECK(j["insertions"] == json::array({2, 2}));
  CHECK(j["cy_bps"]["terms"].empty());
  REQUIRE(j["fano_bps"]["terms"].size() == 2);
  CHECK(j["fano_bps"]["terms"][0]["coeff"] == "5");
  CHECK(j["fano_bps"]["terms"][1]["coeff"] == "1/6");
}

TEST_CASE("am inverts the cover sum") {
  fs::path in = work_dir() / "am.json";
  spit(in, R"({
  "rank": 1,
  "area_weights": ["1"],
  "energy": "3",
  "genus_max": 0,
  "terms": [
    {"class": [1], "genus": 0, "coeff": "1"},
    {"class": [2], "genus": 0, "coeff": "1/8"},
    {"class": [3], "genus": 0, "coeff": "1/27"}
  ]
})");
  RunResult r = run("am --in '" + in.string() + "' --insertions 0");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["class"] == json::array({1}));
  CHECK(j["terms"][0]["coeff"] == "1");
}

TEST_CASE("dim prints the expected dimension") {
  RunResult r = run("dim --c1a 1 --dimx 6 --genus 0 --dims 4");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["expected_dimension"] == 0);
  RunResult r2 = run("dim --c1a 0 --dimx 8 --genus 0 --dims 2,2");
  CHECK(json::parse(r2.out)["expected_dimension"] == 2);
}

TEST_CASE("error protocol: exit 2 with a machine-readable object") {
  // malformed JSON
  fs::path bad = work_dir() / "bad.json";
  spit(bad, "{");
  RunResult r1 = run("solve --in '" + bad.string() + "' --torder 4");
  CHECK(r1.exit_code == 2);
  CHECK(r1.out.empty());
  CHECK(error_kind(r1) == "schema_error");

  // missing file
  RunResult r2 = run("solve --in '" + (work_dir() / "nope.json").string() +
                     "' --torder 4");
  CHECK(r2.exit_code == 2);
  CHECK(error_kind(r2) == "domain_error");

  // missing required flag
  RunResult r3 = run("bps");
  CHECK(r3.exit_code == 2);
  CHECK(error_kind(r3) == "usage_error");

  // unknown subcommand
  RunResult r4 = run("frobnicate");
  CHECK(r4.exit_code == 2);
  CHECK(error_kind(r4) == "usage_error");

  // t-order too small for the table's genus window
  fs::path n_path = work_dir() / "n2.json";
  spit(n_path, R"({
  "rank": 1,
  "area_weights": ["1"],
  "energy": "1",
  "h_max": 1,
  "terms": [{"class": [1], "h": 1, "coeff": "1"}]
})");
  RunResult r5 = run("bps --in '" + n_path.string() + "' --torder 2");
  CHECK(r5.exit_code == 2);
  CHECK(error_kind(r5) == "invalid_truncation");

  // bad thread count from the environment
  RunResult r6 = run("elem --genus 1 --qdeg 2", "GVKIT_THREADS=abc");
  CHECK(r6.exit_code == 2);
  CHECK(error_kind(r6) == "domain_error");

  // --help is not an error
  RunResult r7 = run("--help");
  CHECK(r7.exit_code == 0);
}
