#pragma once

#include <vector>

#include "dfsim/types.hpp"

namespace dfsim {

/// Dissipative coupling of an n-photon register: the correlation matrix
/// C_jk = avg(Delta_j Delta_k) and an overall rate gamma. Fully determines
/// the generator.
struct CouplingModel {
  int n_photons;
  RealMatrix correlation;  // symmetric PSD, n x n
  double gamma;            // > 0
};

struct CollapseChannel {
  Matrix op;        // Hermitian collapse operator L
  Matrix op_sq;     // L^dagger L, precomputed
  double rate;      // >= 0
};

/// A set of weighted collapse channels acting on a 2^n-dimensional register.
/// Immutable after construction; safe to share across threads.
class LindbladGenerator {
 public:
  LindbladGenerator(std::vector<CollapseChannel> channels, Eigen::Index dim);

  Eigen::Index dim() const { return dim_; }
  const std::vector<CollapseChannel>& channels() const { return channels_; }

 private:
  std::vector<CollapseChannel> channels_;
  Eigen::Index dim_;
};

/// Factor the correlation matrix C = sum_m lambda_m v_m v_m^T and emit one
/// channel per (Pauli axis, mode) pair:
///   L_{i,m} = sum_j v_m[j] sigma_{i,j},  rate (gamma/2) lambda_m.
/// This normalization makes C = [[1,-1],[-1,1]] match the tabulated
/// two-photon equations (see tabulated_pair_rhs) and C = [1] the standard
/// single-qubit depolarizer (gamma/2)(sum_i sigma rho sigma - 3 rho).
/// Eigenvalues in [-1e-8, 0) are clipped to zero; below that the matrix is
/// rejected as non-PSD.
LindbladGenerator build_generator(const CouplingModel& model);

/// D[rho] = sum_channels rate (L rho L^dagger - 1/2 {L^dagger L, rho}).
/// Trace-free and Hermiticity-preserving by construction.
Matrix apply(const LindbladGenerator& g, const Matrix& rho);

/// Dense superoperator matrix S with apply(g, rho) = unvec(S vec(rho)),
/// column-major vectorization: vec(A rho B) = (B^T (x) A) vec(rho).
Matrix superoperator(const LindbladGenerator& g);

/// Entrywise right-hand side of the anticorrelated two-photon master
/// equation, transcribed as an explicit 4x4 table and extended to all 16
/// entries by Hermiticity. Deliberately independent of build_generator: it
/// exists as a cross-check that pins the channel normalization.
Matrix tabulated_pair_rhs(const Matrix& rho, double gamma);

}  // namespace dfsim
