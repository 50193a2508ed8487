#include "dfsim/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace dfsim {

Matrix pauli(PauliAxis axis) {
  Matrix m(2, 2);
  switch (axis) {
    case PauliAxis::X:
      m << 0, 1, 1, 0;
      break;
    case PauliAxis::Y:
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case PauliAxis::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix embed(const Matrix& op, int site, int n_qubits) {
  if (op.rows() != 2 || op.cols() != 2) {
    throw std::invalid_argument("embed: operator must be 2x2");
  }
  if (site < 1 || site > n_qubits) {
    throw std::invalid_argument("embed: site " + std::to_string(site) +
                                " out of range [1, " +
                                std::to_string(n_qubits) + "]");
  }
  Matrix out = Matrix::Identity(1, 1);
  for (int j = 1; j <= n_qubits; ++j) {
    out = (j == site) ? kron(out, op) : kron(out, Matrix::Identity(2, 2));
  }
  return out;
}

Matrix weighted_collective(PauliAxis axis, const RealVector& weights) {
  const int n = static_cast<int>(weights.size());
  if (n == 0) {
    throw std::invalid_argument("weighted_collective: empty weight vector");
  }
  if (!weights.allFinite()) {
    throw std::invalid_argument("weighted_collective: non-finite weights");
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix out = Matrix::Zero(dim, dim);
  const Matrix sigma = pauli(axis);
  for (int j = 0; j < n; ++j) {
    if (weights[j] == 0.0) continue;
    out += weights[j] * embed(sigma, j + 1, n);
  }
  return out;
}

Matrix matrix_exp(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("matrix_exp: matrix must be square");
  }
  if (!a.allFinite()) {
    throw std::invalid_argument("matrix_exp: non-finite entries");
  }
  const Eigen::Index n = a.rows();

  // Scale until the infinity norm is at most 1/4, exponentiate the scaled
  // matrix by Taylor series, then square back up.
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.25) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  }
  const Matrix b = a / std::exp2(squarings);

  Matrix term = Matrix::Identity(n, n);
  Matrix sum = term;
  for (int k = 1; k <= 40; ++k) {
    term = (term * b) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() <=
        1e-18 * std::max(1.0, sum.cwiseAbs().maxCoeff())) {
      break;
    }
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

}  // namespace dfsim
