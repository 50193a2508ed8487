#pragma once

#include <array>
#include <vector>

#include "dfsim/types.hpp"

namespace dfsim {

/// Residuals of the decoherence-free condition, one per Pauli axis.
struct DfsReport {
  std::array<double, 3> residuals;  // X, Y, Z
  double max_residual;
  double tolerance;
  bool is_df;  // max_residual <= tolerance
};

inline constexpr double kDfsDefaultTol = 1e-10;

/// Is psi stationary under every collective operator built from `weights`?
/// Residual per axis: || L psi - <psi|L|psi> psi ||_2 with
/// L = weighted_collective(axis, weights). Zero iff psi is an eigenvector of
/// every L, the dark-state condition for Hermitian collapse operators.
DfsReport dark_state_check(const Vector& psi, const RealVector& weights,
                           double tol = kDfsDefaultTol);

/// Does every collective operator act as a scalar on span(basis)? Residual
/// per axis: ||(I-P) L P||_F + ||P L P - c P||_F with P the projector onto
/// the span and c = tr(P L P)/dim(P). Requires an orthonormal basis (within
/// 1e-10). For a single basis vector this reduces exactly to
/// dark_state_check.
DfsReport subspace_check(const std::vector<Vector>& basis,
                         const RealVector& weights,
                         double tol = kDfsDefaultTol);

/// Empirical decay rate of |psi> under the generator built from the rank-1
/// correlation w w^T at rate gamma: propagate psi psi^dagger, fit the decay
/// of fidelity-above-stationary in two passes (the second over
/// t in [0, 2/rate]). Returns 0 when the fidelity is already stationary
/// (fitted rate below 1e-6 gamma).
double decay_rate_probe(const Vector& psi, const RealVector& weights,
                        double gamma);

}  // namespace dfsim
