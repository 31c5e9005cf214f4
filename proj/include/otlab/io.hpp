// io.hpp
//
// Loss-free JSON round-trips for measures and transport plans. Integers are
// rendered as decimal strings so nothing silently saturates at 64 bits.

#pragma once

#include <string>

#include "json.hpp"
#include "otlab/transport.hpp"

namespace otlab {

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json measure_to_json(const LatticeMeasure& m);
LatticeMeasure measure_from_json(const nlohmann::json& j);

// {"source": <measure>, "target": <measure>, "moves": [{"from", "to", "mass"}...]}
nlohmann::json plan_to_json(const TransportPlan& p);
TransportPlan plan_from_json(const nlohmann::json& j);

std::string read_text_file(const std::string& path);           // throws std::runtime_error
void write_text_file(const std::string& path, const std::string& body);

}  // namespace otlab
