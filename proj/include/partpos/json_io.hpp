#pragma once

#include "json.hpp"

#include "partpos/svalue.hpp"
#include "partpos/symspace.hpp"

namespace partpos {

using Json = nlohmann::ordered_json;

Json params_to_json(const SpaceParams& params);
SpaceParams params_from_json(const Json& j);

// {family, params, l, r, dimension, s_k, s, argmax, zero_count, multiplicities}
Json report_to_json(const SValueReport& report);
// Rebuilds the space from family and params, then reads the computed fields
// back. Throws ParameterError on malformed input.
SValueReport report_from_json(const Json& j);

Json discrepancies_to_json(const DiscrepancyReport& report);

// One object per family with its default instance.
Json catalog_to_json();

}  // namespace partpos
