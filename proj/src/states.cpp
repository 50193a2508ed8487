#include "dfsim/states.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "dfsim/operators.hpp"

namespace dfsim {

namespace {

Vector basis_ket(int index, Eigen::Index dim) {
  Vector v = Vector::Zero(dim);
  v[index] = 1.0;
  return v;
}

// |q1 q2 ... qn> with q = 0 for H, 1 for V; leftmost qubit is the most
// significant bit (site 1 = leftmost tensor factor).
Vector product_ket(std::initializer_list<int> bits) {
  int index = 0;
  for (int b : bits) index = 2 * index + b;
  return basis_ket(index, Eigen::Index{1} << bits.size());
}

Vector singlet_pair() {
  return (product_ket({0, 1}) - product_ket({1, 0})) / std::sqrt(2.0);
}

}  // namespace

std::optional<NamedState> named_state_from_string(const std::string& tag) {
  if (tag == "singlet") return NamedState::Singlet;
  if (tag == "product_H") return NamedState::ProductH;
  if (tag == "product_HH") return NamedState::ProductHH;
  if (tag == "logical0_4q") return NamedState::Logical0;
  if (tag == "logical1_4q") return NamedState::Logical1;
  if (tag == "maximally_mixed") return NamedState::MaximallyMixed;
  return std::nullopt;
}

std::string to_string(NamedState tag) {
  switch (tag) {
    case NamedState::Singlet: return "singlet";
    case NamedState::ProductH: return "product_H";
    case NamedState::ProductHH: return "product_HH";
    case NamedState::Logical0: return "logical0_4q";
    case NamedState::Logical1: return "logical1_4q";
    case NamedState::MaximallyMixed: return "maximally_mixed";
  }
  throw std::invalid_argument("unknown state tag");
}

bool is_pure(NamedState tag) { return tag != NamedState::MaximallyMixed; }

Eigen::Index named_state_dim(NamedState tag) {
  switch (tag) {
    case NamedState::ProductH: return 2;
    case NamedState::Singlet:
    case NamedState::ProductHH:
    case NamedState::MaximallyMixed: return 4;
    case NamedState::Logical0:
    case NamedState::Logical1: return 16;
  }
  throw std::invalid_argument("unknown state tag");
}

Vector named_pure(NamedState tag) {
  switch (tag) {
    case NamedState::Singlet:
      return singlet_pair();
    case NamedState::ProductH:
      return basis_ket(0, 2);
    case NamedState::ProductHH:
      return basis_ket(0, 4);
    case NamedState::Logical0: {
      const Vector s = singlet_pair();
      Vector out = Vector::Zero(16);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[4 * i + j] = s[i] * s[j];
      return out;
    }
    case NamedState::Logical1: {
      // (|HHVV> + |VVHH>)/sqrt(3) - (|HV>+|VH>)(|HV>+|VH>)/(2 sqrt(3)).
      // The printed coefficients are already normalized:
      // 2*(1/3) + 4*(1/12) = 1.
      Vector out = product_ket({0, 0, 1, 1}) + product_ket({1, 1, 0, 0});
      out /= std::sqrt(3.0);
      const Vector triplet = product_ket({0, 1}) + product_ket({1, 0});
      Vector cross = Vector::Zero(16);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) cross[4 * i + j] = triplet[i] * triplet[j];
      out -= cross / (2.0 * std::sqrt(3.0));
      return out;
    }
    case NamedState::MaximallyMixed:
      throw std::invalid_argument("maximally_mixed is not a pure state");
  }
  throw std::invalid_argument("unknown state tag");
}

Matrix named_density(NamedState tag) {
  if (tag == NamedState::MaximallyMixed) {
    return Matrix::Identity(4, 4) / 4.0;
  }
  return density_from_pure(named_pure(tag));
}

Matrix density_from_pure(const Vector& psi) {
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument("density_from_pure: state norm " +
                                std::to_string(norm) + " is not 1");
  }
  return psi * psi.adjoint();
}

StateDefects validate(const Matrix& rho) {
  if (rho.rows() != rho.cols() || !is_power_of_two(rho.rows())) {
    throw std::invalid_argument("validate: density matrix must be square "
                                "with power-of-two dimension");
  }
  StateDefects d{};
  d.hermiticity_defect = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  d.trace_defect = std::abs(rho.trace() - Complex(1.0, 0.0));
  const Matrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm,
                                           Eigen::EigenvaluesOnly);
  d.min_eigenvalue = es.eigenvalues().minCoeff();
  return d;
}

bool passes(const StateDefects& d, double herm_tol, double trace_tol,
            double eig_tol) {
  return d.hermiticity_defect <= herm_tol && d.trace_defect <= trace_tol &&
         d.min_eigenvalue >= eig_tol;
}

Matrix random_density(std::uint64_t seed, Eigen::Index dim) {
  if (!is_power_of_two(dim)) {
    throw std::invalid_argument("random_density: dim must be a power of two");
  }
  std::mt19937_64 rng(seed);
  // Box-Muller on the raw 53-bit stream; std::normal_distribution is
  // implementation-defined and would break cross-platform reproducibility.
  auto uniform = [&rng]() {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  };
  auto gauss = [&]() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  };
  Matrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      g(i, j) = Complex(gauss(), gauss());
    }
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

}  // namespace dfsim
