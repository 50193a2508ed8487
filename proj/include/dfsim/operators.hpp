#pragma once

#include <array>

#include "dfsim/types.hpp"

namespace dfsim {

enum class PauliAxis { X, Y, Z };

inline constexpr std::array<PauliAxis, 3> kPauliAxes = {
    PauliAxis::X, PauliAxis::Y, PauliAxis::Z};

/// Standard 2x2 Pauli matrix. Basis ordering |H> = (1,0)^T, |V> = (0,1)^T;
/// sigma_y = [[0,-i],[i,0]], sigma_z = diag(1,-1).
Matrix pauli(PauliAxis axis);

/// Kronecker product (dense).
Matrix kron(const Matrix& a, const Matrix& b);

/// Embed a 2x2 operator on qubit `site` (1-based, site 1 is the leftmost
/// tensor factor) of an n-qubit register, identity elsewhere.
Matrix embed(const Matrix& op, int site, int n_qubits);

/// Weighted sum of single-site Paulis: sum_j weights[j] * sigma_axis on site j.
Matrix weighted_collective(PauliAxis axis, const RealVector& weights);

/// Dense matrix exponential, scaling-and-squaring with a truncated Taylor
/// series. Truncation error below 1e-13 in max-entry norm for inputs with
/// norm up to ~100.
Matrix matrix_exp(const Matrix& a);

}  // namespace dfsim
