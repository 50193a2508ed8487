#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dfsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Scenario-file validation failure. Carries the offending field name so the
/// CLI can report it and exit with code 2.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string field, const std::string& message)
      : std::runtime_error("field '" + field + "': " + message),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Numerical breakdown during time evolution (non-finite values or a snapshot
/// failing the trajectory validity tolerances). Carries the step index; the
/// CLI maps this to exit code 3.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(std::size_t step, const std::string& message)
      : std::runtime_error("step " + std::to_string(step) + ": " + message),
        step_(step) {}

  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

inline bool is_power_of_two(Eigen::Index n) {
  return n > 0 && (n & (n - 1)) == 0;
}

/// Number of qubits for a register of dimension `dim` (dim = 2^n).
inline int qubit_count(Eigen::Index dim) {
  if (!is_power_of_two(dim)) {
    throw std::invalid_argument("dimension " + std::to_string(dim) +
                                " is not a power of two");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

}  // namespace dfsim
