#include "lensball/pd_json.hpp"

#include <fstream>

namespace lensball {

nlohmann::ordered_json pd_to_json(const PDCode& d) {
  int loops = 0;
  const auto xs = d.tuples(&loops);
  PDCode c = d.compacted();
  c.orient();
  nlohmann::ordered_json j;
  j["crossings"] = nlohmann::ordered_json::array();
  for (auto& t : xs) j["crossings"].push_back({t[0], t[1], t[2], t[3]});
  j["signs"] = nlohmann::ordered_json::array();
  for (int n = 0; n < c.node_count(); ++n)
    if (c.is_crossing(n)) j["signs"].push_back(c.sign(n));
  if (loops > 0) j["loops"] = loops;
  return j;
}

PDCode pd_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("crossings") || !j["crossings"].is_array())
    throw InvalidDiagram("PD JSON needs a \"crossings\" array");
  std::vector<PDTuple> xs;
  for (auto& t : j["crossings"]) {
    if (!t.is_array() || t.size() != 4) throw InvalidDiagram("each crossing must list four edge labels");
    PDTuple x{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (!t[i].is_number_integer()) throw InvalidDiagram("edge labels must be integers");
      x[i] = t[i].get<int>();
    }
    xs.push_back(x);
  }
  const int loops = j.contains("loops") ? j["loops"].get<int>() : 0;
  if (loops < 0) throw InvalidDiagram("negative loop count");
  PDCode d = PDCode::from_tuples(xs, loops);
  d.validate();
  if (j.contains("signs")) {
    const auto expect = pd_to_json(d)["signs"];
    if (j["signs"] != nlohmann::json(expect)) throw InvalidDiagram("\"signs\" disagree with the crossings");
  }
  return d;
}

PDCode read_pd_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidDiagram("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidDiagram(std::string("bad JSON in ") + path + ": " + e.what());
  }
  return pd_from_json(j);
}

}  // namespace lensball
