#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dfsim/propagate.hpp"
#include "dfsim/spectra.hpp"
#include "dfsim/states.hpp"
#include "dfsim/types.hpp"

namespace dfsim {

/// Canonical couplings exposed by name. These fix the correlation matrix so
/// that the textbook decay rates come out in units of the scenario gamma:
///   single_depolarizing  n=1, C=[1]        (depolarization rate 2 gamma)
///   anticorrelated_pair  n=2, C=[[1,-1],[-1,1]]  (fidelity rate 8 gamma)
///   collective_equal     any n, C = all-ones     (collective ideal)
enum class CouplingPreset { SingleDepolarizing, AnticorrelatedPair, CollectiveEqual };

std::optional<CouplingPreset> coupling_preset_from_string(const std::string& s);
std::string to_string(CouplingPreset preset);
RealMatrix preset_correlation(CouplingPreset preset, int n_photons);

enum class Integrator { Rk4, Expm, ClosedForm };

std::optional<Integrator> integrator_from_string(const std::string& s);
std::string to_string(Integrator integrator);

enum class ObservableKind { Fidelity, Purity, TraceDistance, Concurrence, XVariables };

std::optional<ObservableKind> observable_from_string(const std::string& s);
std::string to_string(ObservableKind kind);

/// One initial-state description: a catalog tag, an explicit density matrix,
/// or a seeded random density ("random", drawn from the scenario seed).
struct StateSpec {
  enum class Kind { Named, ExplicitMatrix, Random };
  Kind kind = Kind::Named;
  NamedState named = NamedState::Singlet;
  Matrix matrix;  // Kind::ExplicitMatrix only
};

/// Declarative run description parsed from a scenario JSON file.
struct Scenario {
  int n_photons = 1;
  double gamma = 1.0;

  bool coupling_is_preset = true;
  CouplingPreset preset = CouplingPreset::SingleDepolarizing;
  CorrelationModel correlation;  // used when !coupling_is_preset

  /// Usually one entry; several entries form the basis list consumed by
  /// dfs-check.
  std::vector<StateSpec> initial_states;

  TimeGrid time{10.0, 1e-3, 1};
  Integrator integrator = Integrator::Rk4;
  std::vector<ObservableKind> observables;
  std::uint64_t seed = 0;
};

/// Parse and fully validate a scenario document. Throws SchemaError naming
/// the offending field.
Scenario parse_scenario(const nlohmann::json& doc);
Scenario load_scenario(const std::string& path);

/// Normalized JSON form; parse_scenario(scenario_to_json(s)) is equivalent
/// to s.
nlohmann::json scenario_to_json(const Scenario& scenario);

/// Resolve the coupling description to a correlation matrix.
RealMatrix scenario_correlation(const Scenario& scenario);

/// Resolve one state spec to a density matrix (Random uses the scenario
/// seed, offset by the spec's position in the list).
Matrix resolve_density(const Scenario& scenario, std::size_t index = 0);

/// Resolve every state spec to a pure state; throws SchemaError if any entry
/// is mixed (used by dfs-check).
std::vector<Vector> resolve_pure_states(const Scenario& scenario);

/// Density matrix <-> JSON array-of-arrays of [re, im] pairs, row-major.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, const std::string& field);

}  // namespace dfsim
