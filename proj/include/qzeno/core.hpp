// Copyright 2026 The qzeno Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense complex matrices and the Hermitian density-matrix type.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "qzeno/errors.hpp"

namespace qz {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kHermiticityTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPositivityTol = 1e-10;
inline constexpr double kSymmetryTol = 1e-10;

/// Largest |A_jk - conj(A_kj)| over all entries.
inline double hermiticity_residual(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("hermiticity_residual", a.rows(), a.cols(), a.cols(), a.rows());
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

inline double symmetry_residual(const RealMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("symmetry_residual", a.rows(), a.cols(), a.cols(), a.rows());
  if (a.size() == 0) return 0.0;
  return (a - a.transpose()).cwiseAbs().maxCoeff();
}

/// Square complex matrix that is Hermitian by construction.
///
/// Every mutation writes both (j,k) and (k,j), so long propagation chains
/// cannot drift away from Hermiticity. Density matrices and (as the real
/// special case) Hamiltonians both live here.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(Index dim) : m_(ComplexMatrix::Zero(dim, dim)) {
    if (dim <= 0) throw ParameterError("HermitianMatrix: dimension must be positive");
  }

  /// Accepts `a` if it is Hermitian within `tol` and stores (a + a^dagger)/2.
  static HermitianMatrix from_matrix(const ComplexMatrix& a, double tol = kHermiticityTol) {
    if (a.rows() != a.cols() || a.rows() == 0)
      throw DimensionError("HermitianMatrix::from_matrix: not square", a.rows(), a.cols(), a.cols(), a.rows());
    const double res = hermiticity_residual(a);
    if (!(res <= tol))
      throw ValidationError("HermitianMatrix::from_matrix: Hermiticity residual " + std::to_string(res) +
                            " exceeds tolerance");
    HermitianMatrix h;
    h.m_ = 0.5 * (a + a.adjoint());
    return h;
  }

  static HermitianMatrix from_real_symmetric(const RealMatrix& a) {
    return from_matrix(a.cast<Complex>(), kSymmetryTol);
  }

  /// |s><s|
  static HermitianMatrix projector(Index dim, Index s) {
    HermitianMatrix h(dim);
    if (s < 0 || s >= dim) throw ParameterError("HermitianMatrix::projector: index out of range");
    h.m_(s, s) = 1.0;
    return h;
  }

  static HermitianMatrix maximally_mixed(Index dim) {
    HermitianMatrix h(dim);
    h.m_.diagonal().setConstant(Complex(1.0 / static_cast<double>(dim), 0.0));
    return h;
  }

  Index dim() const noexcept { return m_.rows(); }
  Complex operator()(Index j, Index k) const { return m_(j, k); }
  const ComplexMatrix& matrix() const noexcept { return m_; }

  /// Sets entry (j,k) and its mirror (k,j) = conj(value). Diagonal entries keep only the real part.
  void set(Index j, Index k, Complex value) {
    check_index(j);
    check_index(k);
    if (j == k) {
      m_(j, j) = Complex(value.real(), 0.0);
    } else {
      m_(j, k) = value;
      m_(k, j) = std::conj(value);
    }
  }

  double trace() const { return m_.diagonal().real().sum(); }
  /// tr(rho^2) = sum |rho_jk|^2 for Hermitian rho.
  double purity() const { return m_.cwiseAbs2().sum(); }
  RealVector diagonal() const { return m_.diagonal().real(); }

  RealVector eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
  }

  friend bool operator==(const HermitianMatrix& a, const HermitianMatrix& b) { return a.m_ == b.m_; }

 private:
  void check_index(Index j) const {
    if (j < 0 || j >= dim()) throw ParameterError("HermitianMatrix: index " + std::to_string(j) + " out of range");
  }

  ComplexMatrix m_;
};

/// Residuals of the density-matrix contract; `ok()` applies the standard tolerances.
struct DensityCheck {
  double hermiticity = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;
  double purity = 0.0;
  Index dim = 0;

  bool ok() const {
    const double lo = 1.0 / static_cast<double>(dim) - kTraceTol;
    return hermiticity <= kHermiticityTol && trace_error <= kTraceTol && min_eigenvalue >= -kPositivityTol &&
           purity >= lo && purity <= 1.0 + kTraceTol;
  }
};

inline DensityCheck check_density(const HermitianMatrix& rho) {
  DensityCheck c;
  c.dim = rho.dim();
  c.hermiticity = hermiticity_residual(rho.matrix());
  c.trace_error = std::abs(rho.trace() - 1.0);
  c.min_eigenvalue = rho.eigenvalues().minCoeff();
  c.purity = rho.purity();
  return c;
}

inline void validate_density(const HermitianMatrix& rho, const std::string& context) {
  const DensityCheck c = check_density(rho);
  if (!c.ok())
    throw ValidationError(context + ": invalid density matrix (trace error " + std::to_string(c.trace_error) +
                          ", min eigenvalue " + std::to_string(c.min_eigenvalue) + ", purity " +
                          std::to_string(c.purity) + ")");
}

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matmul", a.rows(), a.cols(), b.rows(), b.cols());
  return a * b;
}

/// [H, rho] = H rho - rho H for real symmetric H.
inline ComplexMatrix commutator(const RealMatrix& h, const HermitianMatrix& rho) {
  if (h.rows() != rho.dim() || h.cols() != rho.dim())
    throw DimensionError("commutator", h.rows(), h.cols(), rho.dim(), rho.dim());
  const ComplexMatrix hr = h.cast<Complex>() * rho.matrix();
  // rho H = (H rho)^dagger because both factors are Hermitian.
  return hr - hr.adjoint();
}

/// Eigen-decomposition of a real symmetric H: H = V diag(lambda) V^T.
struct SpectralData {
  RealVector eigenvalues;   // ascending
  RealMatrix eigenvectors;  // column j <-> eigenvalues[j]

  Index dim() const noexcept { return eigenvalues.size(); }

  double orthogonality_residual() const {
    return (eigenvectors.transpose() * eigenvectors - RealMatrix::Identity(dim(), dim())).cwiseAbs().maxCoeff();
  }

  double reconstruction_residual(const RealMatrix& h) const {
    return (eigenvectors * eigenvalues.asDiagonal() * eigenvectors.transpose() - h).cwiseAbs().maxCoeff();
  }
};

}  // namespace qz
