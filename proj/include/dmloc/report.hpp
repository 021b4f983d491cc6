#pragma once

#include <nlohmann/json.hpp>

#include "dmloc/config.hpp"
#include "dmloc/lattice.hpp"
#include "dmloc/ramification.hpp"

namespace dmloc {

using nlohmann::json;

// JSON views. Rationals and big integers are strings; no floating point.
json to_json(const ASClass& c);
json to_json(const KummerBreakReport& r);
json to_json(const KummerImageReport& r);
json to_json(const ConductorReport& r);
json to_json(const VolumeReport& r);
json to_json(const DeterminantVolume& r);
json to_json(const GeneratorBound& r);
json to_json(const OrthogonalBasis& b, uint64_t q);
json norm_json(const NormValue& n, uint64_t q);

// Command bodies shared by the CLI and the tests.
json cmd_height(const Problem& p);
json cmd_volume(const Problem& p);
json cmd_reduce(const Problem& p);
json cmd_conductor(const Problem& p);
json cmd_as_break(const Problem& p);
json cmd_kummer(const Problem& p);

}  // namespace dmloc
