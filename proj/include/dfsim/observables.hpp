#pragma once

#include <array>
#include <span>

#include "dfsim/types.hpp"

namespace dfsim {

/// The ten linear combinations of two-photon density-matrix entries that
/// evolve as independent exponentials under the anticorrelated-pair
/// generator. x1..x4 are real for Hermitian input; x5 is purely imaginary and
/// stored as its real coefficient of i (x5 = 2 Im rho_23); x6..x10 are
/// complex.
struct XVariables {
  double x1;   // rho11 - rho44
  double x2;   // rho22 - rho33
  double x3;   // rho11 - rho22 - rho33 + rho44 + 2 rho23 + 2 rho32
  double x4;   // rho11 - rho22 - rho33 + rho44 - rho23 - rho32
  double x5;   // coefficient of i in rho23 - rho32
  Complex x6;  // rho12 + rho13
  Complex x7;  // rho24 + rho34
  Complex x8;  // rho12 - rho13 + rho24 - rho34
  Complex x9;  // rho12 - rho13 - rho24 + rho34
  Complex x10; // rho14
};

/// Decay rates of x1..x10 in units of gamma under the anticorrelated-pair
/// generator.
inline constexpr std::array<double, 10> kXDecayRates = {2, 2, 8, 2, 6,
                                                        2, 2, 6, 2, 2};

/// Pure-reference fidelity <ref| rho |ref>.
double fidelity(const Matrix& rho, const Vector& reference);

/// tr(rho^2).
double purity(const Matrix& rho);

/// (1/2) sum |eig(a - b)| for Hermitian a, b.
double trace_distance(const Matrix& a, const Matrix& b);

/// Wootters concurrence of a two-qubit density matrix: max(0, l1-l2-l3-l4)
/// with l_k the decreasing square roots of the eigenvalues of
/// rho (sy sy) rho* (sy sy).
double concurrence(const Matrix& rho);

/// Forward / inverse transform between a 4x4 density matrix and the x
/// variables. The inverse uses unit trace and Hermiticity to reconstruct all
/// 16 entries; x_inverse(x_transform(rho)) == rho for valid rho.
XVariables x_transform(const Matrix& rho);
Matrix x_inverse(const XVariables& x);

/// Least-squares slope of log|value| vs t over the samples with
/// |value| > floor; returns the negated slope. Throws std::invalid_argument
/// when fewer than 10 samples survive the floor.
double fit_rate(std::span<const double> times, std::span<const double> values,
                double floor);

/// Same, with the default floor 1e-8 * max|value|.
double fit_rate(std::span<const double> times, std::span<const double> values);

}  // namespace dfsim
