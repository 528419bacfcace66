// PD codes as JSON: {"crossings": [[a, b, c, d], ...], "signs": [...]}, with
// edges numbered along the orientation and tuples in the KnotTheory
// convention. Crossingless loops, if any, are counted under "loops".
#pragma once

#include <string>

#include <json.hpp>

#include "lensball/diagram.hpp"

namespace lensball {

nlohmann::ordered_json pd_to_json(const PDCode& d);

/// Accepts the format above; "signs" is optional and, when present, must
/// match the signs implied by the tuples. Throws InvalidDiagram.
PDCode pd_from_json(const nlohmann::json& j);

PDCode read_pd_file(const std::string& path);

}  // namespace lensball
