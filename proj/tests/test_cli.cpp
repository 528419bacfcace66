#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using lensball::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("lensball_cli_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("cf") {
    const Result w = call({"cf", "wahl", "--p", "2", "--q", "1"});
    CHECK(w.code == 0);
    CHECK(w.json()["coeffs"] == nlohmann::json::array({4}));
    CHECK(w.json()["value"]["num"] == 4);
    CHECK(call({"cf", "wahl", "3", "1"}).json()["coeffs"] == nlohmann::json::array({5, 2}));
    CHECK(call({"cf", "expand", "18", "11"}).json()["coeffs"] == nlohmann::json::array({2, 3, 4}));
    const Result e = call({"cf", "eval", "2,2,5,4"});
    CHECK(e.json()["value"]["num"] == 49);
    CHECK(e.json()["value"]["den"] == 34);
    // [3^60] = F(122)/F(120), past 64 bits: values come back as strings.
    std::string threes = "3";
    for (int i = 1; i < 60; ++i) threes += ",3";
    const Result big = call({"cf", "eval", threes});
    REQUIRE(big.code == 0);
    const std::string num = big.json()["value"]["num"], den = big.json()["value"]["den"];
    CHECK(num == "14028366653498915298923761");
    const Result back = call({"cf", "expand", num, den});
    CHECK(back.json()["coeffs"].size() == 60);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"cf", "expand", "4", "2"}).code == 2);
    CHECK(call({"cf", "expand", "x", "2"}).code == 2);
    CHECK(call({"cf", "wahl", "--p", "5"}).code == 2);
    CHECK(call({"cf", "eval", "2,,3"}).code == 2);
    CHECK(call({"verify", "pps", "--p", "7"}).code == 2);
    CHECK(call({"verify", "nonsense", "--p", "7"}).code == 2);
    CHECK(call({"verify", "cp2bar"}).code == 2);
    CHECK(call({"covers"}).code == 2);
    CHECK(call({"tree", "--variant", "w3"}).code == 2);
    CHECK(call({"invariants", "--pd", "/nonexistent.json"}).code == 2);
    CHECK(call({"suite", "--only", "11"}).code == 2);
    CHECK(call({"--help"}).code == 0);
  }

  TEST_CASE("tree and wahl") {
    const Result t = call({"tree", "--variant", "w2", "--depth", "1"});
    CHECK(t.code == 0);
    const auto nodes = t.json()["nodes"];
    REQUIRE(nodes.size() == 3);
    CHECK(nodes[1]["p"] == 3);
    CHECK(nodes[1]["q"] == 1);
    const Result w = call({"wahl", "--depth", "4", "--plus"});
    CHECK(w.code == 0);
    CHECK(w.json()["strings"] == 31);
    CHECK(w.json()["pass"] == true);
  }

  TEST_CASE("diagram, PD file and invariants") {
    const fs::path dir = scratch_dir("diagram");
    const std::string pd = (dir / "s4934.json").string(), svg = (dir / "s4934.svg").string();
    const Result d = call({"diagram", "49", "34", "--pd", pd, "--svg", svg});
    CHECK(d.code == 0);
    CHECK(d.json()["crossings"] == 10);
    CHECK(d.json()["determinant"] == 49);
    CHECK(d.json()["normal_form"] == "S(49,13)");
    CHECK(fs::file_size(svg) > 0);
    const Result i = call({"invariants", "--pd", pd, "--det", "--components"});
    CHECK(i.code == 0);
    CHECK(i.json()["determinant"] == 49);
    CHECK(i.json()["components"] == 1);
    CHECK_FALSE(i.json().contains("jones"));
    CHECK(call({"invariants", "--pd", pd}).json()["jones"] == d.json()["jones"]);
  }

  TEST_CASE("covers") {
    const Result c = call({"covers", "--weights", "2,2,4"});
    CHECK(c.code == 0);
    CHECK(c.json()["snf"] == "Z/10");
    CHECK(c.json()["boundary"] == "S(10,3)");
    CHECK(c.json()["definite"] == "negative");
    const Result pq = call({"covers", "--pq", "49", "34"});
    CHECK(pq.json()["snf"] == "Z/49");
    CHECK(pq.json()["weights"] == nlohmann::json::array({2, 2, 5, 4}));
    CHECK(call({"covers", "--weights", "-2,-2"}).json()["definite"] == "positive");
  }

  TEST_CASE("verify") {
    const Result p = call({"verify", "pps", "--p", "7", "--q", "5"});
    CHECK(p.code == 0);
    CHECK(p.json()["pass"] == true);
    CHECK(p.json()["params"]["boundary_fraction"] == "10/7");
    CHECK(p.json()["params"]["boundary"] == "S(10,3)");
    CHECK_FALSE(p.json().contains("runtime_ms"));
    CHECK(call({"verify", "pps", "--p", "7", "--q", "5"}).out == p.out);

    const fs::path dir = scratch_dir("verify");
    const std::string report = (dir / "cp2bar.json").string();
    const Result c = call({"verify", "cp2bar", "--n", "1", "--json", report, "--svg-dir", (dir / "svg").string()});
    CHECK(c.code == 0);
    CHECK(c.out.find("S(9,2)") != std::string::npos);
    std::ifstream in(report);
    CHECK(nlohmann::json::parse(in) == c.json());
    CHECK(fs::exists(dir / "svg" / "cp2bar_bands_minus_1.svg"));
    CHECK(fs::exists(dir / "svg" / "cp2bar_surface_minus_1.svg"));

    CHECK(call({"verify", "kh12", "--p", "3"}).code == 0);
    CHECK(call({"verify", "kh13", "--p", "4"}).code == 0);
    CHECK(call({"verify", "psquared", "--p", "2"}).code == 0);
    CHECK(call({"verify", "delta", "--p", "7", "--q", "5"}).code == 0);
    CHECK(call({"verify", "blowup", "--p", "8", "--q", "3"}).code == 0);
    CHECK(call({"verify", "cp2bar", "--n", "2", "--plus", "--timings"}).json().contains("runtime_ms"));
  }

  TEST_CASE("suite and failure exit code") {
    const Result s = call({"suite", "--only", "2,3"});
    CHECK(s.code == 0);
    CHECK(s.json()["criteria"].size() == 2);
    CHECK(s.err.find("[PASS] 2") != std::string::npos);

    // A crossing cap below the diagrams' size makes the bracket checks fail.
    const fs::path dir = scratch_dir("suite");
    const std::string cfg = (dir / "cfg.json").string();
    std::ofstream(cfg) << R"({"diagram_coeff_sum": 6, "crossing_cap": 2})";
    const Result f = call({"suite", "--only", "4", "--config", cfg});
    unsetenv("LENSBALL_CAP");
    CHECK(f.code == 1);
    CHECK(f.json()["pass"] == false);
    CHECK(f.err.find("[FAIL] 4") != std::string::npos);

    std::ofstream(cfg) << R"({"no_such_bound": 1})";
    CHECK(call({"suite", "--config", cfg}).code == 2);
  }
}
