#pragma once

#include <string>

#include "casiphon/params.hpp"

namespace casiphon {

// Parses the flat JSON parameter document. Frequency-valued keys are objects
// {"value": <num>, "unit": "rad_s" | "hz_2pi"}; scalars are plain numbers.
// Throws ConfigError with key / position diagnostics.
PhysicalParams parse_physical_params(const std::string& json_text);
PhysicalParams load_physical_params(const std::string& path);

// Serialized derived-parameter report (inputs echo, derived symbols,
// stability class, regime checks).
std::string derived_report_json(const PhysicalParams& p,
                                const DerivedParams& d,
                                const RegimeReport& regime);

}  // namespace casiphon
