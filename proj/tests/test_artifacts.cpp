#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "lensball/bracket.hpp"
#include "lensball/pd_json.hpp"
#include "lensball/surfaces.hpp"
#include "lensball/svg.hpp"
#include "lensball/twobridge.hpp"

using namespace lensball;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Compares against tests/golden/<name>.svg; LENSBALL_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const std::string& name, const std::string& svg) {
  const std::string path = std::string(LENSBALL_GOLDEN_DIR) + "/" + name + ".svg";
  if (const char* u = std::getenv("LENSBALL_UPDATE_GOLDEN"); u != nullptr && std::string(u) == "1") {
    std::ofstream(path) << svg;
  }
  const std::string want = slurp(path);
  REQUIRE_MESSAGE(!want.empty(), "missing golden file " << path);
  CHECK(svg == want);
}

}  // namespace

TEST_SUITE("linkengine") {
  TEST_CASE("svg golden files") {
    check_golden("s31", svg_export(standard_diagram(3, 1)));
    check_golden("delta21", svg_export(delta(2, 1, DeltaStyle::Vertical)));
    check_golden("fdelta75", svg_export(f_delta(7, 5)));
  }

  TEST_CASE("svg is deterministic and well formed") {
    const DiagramWithBands s = f_prime(7, 5);
    const std::string a = svg_export(s), b = svg_export(s);
    CHECK(a == b);
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(a.find("</svg>") != std::string::npos);
    CHECK(a.find(band_colour("pink")) != std::string::npos);
    CHECK(a.find(band_colour("blue")) != std::string::npos);
    CHECK(svg_export(PDCode::from_tuples({}, 1)).find("<circle") != std::string::npos);
  }

  TEST_CASE("PD JSON round trip") {
    for (auto [p, q] : {std::pair{3, 1}, {5, 2}, {8, 3}, {49, 34}}) {
      const PDCode d = standard_diagram(p, q);
      const auto j = pd_to_json(d);
      CHECK(j["crossings"].size() == static_cast<std::size_t>(d.crossing_count()));
      CHECK(j["signs"].size() == j["crossings"].size());
      const PDCode back = pd_from_json(nlohmann::json::parse(j.dump()));
      CHECK(jones(back) == jones(d));
      CHECK(back.component_count() == d.component_count());
    }
  }

  TEST_CASE("PD JSON rejects bad input") {
    CHECK_THROWS_AS(pd_from_json(nlohmann::json::parse(R"({"crossings":[[1,2,3]]})")), InvalidDiagram);
    CHECK_THROWS_AS(pd_from_json(nlohmann::json::parse(R"({"crossings":[[1,1,2,3]]})")), InvalidDiagram);
    CHECK_THROWS_AS(pd_from_json(nlohmann::json::parse(R"({"crossings":[[1,4,2,5],[3,6,4,1],[5,2,6,3]],"signs":[1,1,1]})")),
                    InvalidDiagram);
    CHECK_NOTHROW(pd_from_json(nlohmann::json::parse(R"({"crossings":[[1,4,2,5],[3,6,4,1],[5,2,6,3]],"signs":[-1,-1,-1]})")));
    CHECK_THROWS_AS(read_pd_file("/nonexistent/pd.json"), InvalidDiagram);
  }
}
