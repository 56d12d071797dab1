#pragma once

#include <nlohmann/json.hpp>

#include "nilsec/orbit.hpp"
#include "nilsec/secant.hpp"

namespace nilsec {

/// {algebra, label, dim, marks, spherical}
nlohmann::json orbit_record(const Orbit& o);

nlohmann::json to_json(const VarietyDescriptor& d);
VarietyDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SecantReport& r);
/// Inverse of to_json; throws ParseError on malformed input.
SecantReport report_from_json(const nlohmann::json& j);

}  // namespace nilsec
