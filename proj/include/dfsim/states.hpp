#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dfsim/types.hpp"

namespace dfsim {

/// Catalog of named polarization states.
///   singlet         (|HV> - |VH>)/sqrt(2), dim 4
///   product_H       |H>, dim 2
///   product_HH      |HH>, dim 4
///   logical0_4q     (|HV>-|VH>)(|HV>-|VH>)/2, dim 16
///   logical1_4q     (|HHVV>+|VVHH>)/sqrt(3)
///                   - (|HV>+|VH>)(|HV>+|VH>)/(2 sqrt(3)), dim 16
///   maximally_mixed I/4, dim 4 (the only mixed entry)
enum class NamedState {
  Singlet,
  ProductH,
  ProductHH,
  Logical0,
  Logical1,
  MaximallyMixed,
};

std::optional<NamedState> named_state_from_string(const std::string& tag);
std::string to_string(NamedState tag);

bool is_pure(NamedState tag);
Eigen::Index named_state_dim(NamedState tag);

/// Amplitudes of a pure catalog state. Throws std::invalid_argument for
/// maximally_mixed.
Vector named_pure(NamedState tag);

/// Density matrix of any catalog state.
Matrix named_density(NamedState tag);

/// rho = psi psi^dagger. Throws std::invalid_argument unless ||psi|| = 1
/// within 1e-12.
Matrix density_from_pure(const Vector& psi);

/// Defect report for a candidate density matrix; the caller decides pass/fail
/// against its own tolerances.
struct StateDefects {
  double hermiticity_defect;  // max-entry |rho - rho^dagger|
  double trace_defect;        // |tr(rho) - 1|
  double min_eigenvalue;      // of the Hermitian part
};

StateDefects validate(const Matrix& rho);

/// Default tolerances for freshly constructed states.
inline constexpr double kHermiticityTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPositivityTol = -1e-10;

bool passes(const StateDefects& d, double herm_tol = kHermiticityTol,
            double trace_tol = kTraceTol, double eig_tol = kPositivityTol);

/// Seeded random density matrix: G G^dagger / tr(G G^dagger) with G a complex
/// Gaussian matrix drawn from an mt19937_64 stream (Box-Muller, so the result
/// is identical across platforms for a given seed).
Matrix random_density(std::uint64_t seed, Eigen::Index dim);

}  // namespace dfsim
