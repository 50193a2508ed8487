#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "dfsim/scenario.hpp"

namespace dfsim {

/// Execute a scenario and render the CSV document (header plus one row per
/// snapshot, full-precision scientific notation). Deterministic: identical
/// scenarios produce identical bytes.
std::string run_to_csv(const Scenario& scenario);

/// Propagate the scenario with its configured integrator. Throws
/// IntegrationError if any snapshot fails the trajectory validity
/// tolerances.
Trajectory run_trajectory(const Scenario& scenario);

/// run_to_csv + atomic write (temp file in the target directory, then
/// rename).
void run_to_file(const Scenario& scenario, const std::string& out_path);

/// DFS verdict for the scenario's initial state(s) under the given coupling
/// weights, plus the fitted decay-rate probe per state.
nlohmann::json dfs_check(const Scenario& scenario, const RealVector& weights);

/// Run every integrator available for the scenario, report pairwise
/// max-entry differences at the snapshot times and the fitted decay rate of
/// each x variable next to its expected value. Two-photon scenarios only.
nlohmann::json compare_methods(const Scenario& scenario);

void write_atomic(const std::string& path, const std::string& content);

}  // namespace dfsim
