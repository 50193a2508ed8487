#pragma once

#include <optional>
#include <string>

#include "dfsim/types.hpp"

namespace dfsim {

/// Gaussian frequency spectrum: center frequency and 1/e half-width delta.
/// The center never enters the dynamics (only deviations from it do).
struct SpectrumModel {
  double center = 0.0;
  double width = 1.0;  // delta > 0
};

/// How the frequency deviations Delta_j of the N photons are correlated.
enum class CorrelationKind {
  AnticorrelatedPair,  // Delta_1 = w, Delta_2 = -w, w Gaussian (width delta)
  CorrelatedPair,      // Delta_1 = Delta_2 = w
  Independent,         // i.i.d. Gaussian per photon
  EqualDeterministic,  // Delta_j = delta exactly, all photons
  Custom,              // explicit second-moment matrix
};

std::optional<CorrelationKind> correlation_kind_from_string(
    const std::string& s);
std::string to_string(CorrelationKind kind);

struct CorrelationModel {
  CorrelationKind kind = CorrelationKind::AnticorrelatedPair;
  int n_photons = 2;
  double width = 1.0;  // delta > 0
  RealMatrix custom;   // used only when kind == Custom
};

/// Second-moment matrix C_jk = avg(Delta_j Delta_k) under the squared
/// spectral amplitude. Gaussian amplitude of width delta has second moment
/// delta^2/2, so the pair kinds return (delta^2/2) * [[1,-+1],[-+1,1]] and
/// Independent returns (delta^2/2) * I. EqualDeterministic is the
/// collective-decoherence idealization: delta^2 times the all-ones matrix.
RealMatrix correlation_matrix(const CorrelationModel& model);

}  // namespace dfsim
