#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "acute/types.hpp"

namespace acute {

using json = nlohmann::ordered_json;

// {"dim": d, "points": [[...], ...], "weights": [...]} -- weights optional
// (uniform when absent).
json configuration_to_json(const PointConfiguration& config);
json measure_to_json(const DiscreteMeasure& mu);
PointConfiguration configuration_from_json(const json& j);
DiscreteMeasure measure_from_json(const json& j);

json load_json_file(const std::string& path);

// Serializer with pinned number formatting: doubles print with 17
// significant digits ('.' decimal separator, unconditionally), so outputs
// round-trip losslessly and reruns are byte-identical.
std::string dump_json(const json& j, int indent = 2);
void write_json_file(const std::string& path, const json& j);

std::string format_double(double v);

// FNV-1a 64-bit content digest (hex), used by run manifests.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace acute
