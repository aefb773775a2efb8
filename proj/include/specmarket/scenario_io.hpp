#pragma once

#include <string>

#include "specmarket/scenario.hpp"

namespace specmarket {

/// Scenario JSON document:
///   {"lambda":1.0,"v":1.0,"theta_max":1.0,"alpha":0.3,"epsilon":0.01,
///    "x":{"kind":"exp","rate":1.0},"y":{"kind":"exp","rate":1.5},
///    "z":{"kind":"exp","rate":0.5},
///    "sim":{"n_jobs":500000,"warmup_fraction":0.1,"seed":1,"batches":20}}
/// Unknown keys are rejected; "sim" is optional. The SPECMARKET_SEED
/// environment variable, when set, overrides the configured seed.
Scenario load_scenario_json(const std::string& text);
Scenario load_scenario_file(const std::string& path);

std::string scenario_to_json(const Scenario& s);

/// Resolve a --scenario argument: an existing file path, or a preset name of
/// the form <combo>-<traffic> (e.g. "exp-light").
Scenario resolve_scenario(const std::string& arg);

}  // namespace specmarket
