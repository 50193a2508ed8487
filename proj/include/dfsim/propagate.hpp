#pragma once

#include <vector>

#include "dfsim/lindblad.hpp"
#include "dfsim/types.hpp"

namespace dfsim {

/// Uniform time grid. Snapshots are taken every `snapshot_stride` steps
/// (plus the final step); all integrators share the same snapshot times so
/// trajectories are directly comparable.
struct TimeGrid {
  double t_max;
  double dt;
  long long snapshot_stride = 1;
};

void validate_grid(const TimeGrid& grid);

/// Step indices at which snapshots are recorded (0, stride, 2*stride, ...,
/// n_steps).
std::vector<long long> snapshot_steps(const TimeGrid& grid);
std::vector<double> snapshot_times(const TimeGrid& grid);

struct Trajectory {
  std::vector<double> times;
  std::vector<Matrix> states;
};

/// Worst-case defects across all snapshots of a trajectory.
struct TrajectoryDefects {
  double max_trace_defect;
  double max_hermiticity_defect;
  double min_eigenvalue;
};

TrajectoryDefects trajectory_defects(const Trajectory& traj);

/// Tolerances a propagated trajectory must satisfy (looser than the
/// construction tolerances: RK4 introduces O(dt^4) defects).
inline constexpr double kTrajectoryTraceTol = 1e-9;
inline constexpr double kTrajectoryHermTol = 1e-9;
inline constexpr double kTrajectoryEigTol = -1e-8;

bool passes(const TrajectoryDefects& d);

/// Classical fixed-step RK4 on d(rho)/dt = D[rho]. Each step ends with the
/// exact re-Hermitization (rho + rho^dagger)/2; trace and positivity are
/// never repaired, so integrator defects stay observable.
Trajectory propagate_rk4(const Matrix& rho0, const LindbladGenerator& g,
                         const TimeGrid& grid);

/// Semigroup propagation: rho(t) = unvec(exp(t S) vec(rho0)) at the snapshot
/// times, with one matrix exponential per distinct snapshot interval.
Trajectory propagate_expm(const Matrix& rho0, const LindbladGenerator& g,
                          const TimeGrid& grid);

/// Closed-form single-photon depolarization:
/// rho(t) = rho0 e^{-2 gamma t} + (I/2)(1 - e^{-2 gamma t}).
Matrix closed_form_single(const Matrix& rho0, double gamma, double t);

/// Closed-form two-photon solution for the anticorrelated-pair generator,
/// valid for arbitrary initial states: decay each x variable at its rate
/// (kXDecayRates * gamma) and invert the transform.
Matrix closed_form_pair(const Matrix& rho0, double gamma, double t);

}  // namespace dfsim
