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

// Exact spectral propagation of rho under a time-independent real symmetric H,
// and a fixed-step RK4 integrator of the Liouville equation used as a cross-check.

#include <cmath>
#include <vector>

#include "qzeno/core.hpp"

namespace qz {

inline SpectralData eigendecompose(const RealMatrix& h) {
  if (h.rows() != h.cols() || h.rows() == 0)
    throw DimensionError("eigendecompose: matrix not square", h.rows(), h.cols(), h.cols(), h.rows());
  const double asym = symmetry_residual(h);
  if (!(asym <= kSymmetryTol)) throw ValidationError("eigendecompose: matrix not symmetric, residual " + std::to_string(asym));

  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(h);
  SpectralData s{solver.eigenvalues(), solver.eigenvectors()};
  if (solver.info() != Eigen::Success) throw ConvergenceError("eigendecompose: solver did not converge", s.reconstruction_residual(h));
  // Scale-aware bound: entries of H are O(1) in every model we build.
  const double tol = 1e-10 * std::max(1.0, h.cwiseAbs().maxCoeff());
  const double recon = s.reconstruction_residual(h);
  if (!(recon <= tol) || !(s.orthogonality_residual() <= 1e-10))
    throw ConvergenceError("eigendecompose: reconstruction check failed", recon);
  return s;
}

/// V^T rho V
inline ComplexMatrix to_eigenbasis(const ComplexMatrix& rho, const SpectralData& spec) {
  const ComplexMatrix vc = spec.eigenvectors.cast<Complex>();
  return vc.adjoint() * rho * vc;
}

/// V rho~ V^T
inline ComplexMatrix from_eigenbasis(const ComplexMatrix& rho_eig, const SpectralData& spec) {
  const ComplexMatrix vc = spec.eigenvectors.cast<Complex>();
  return vc * rho_eig * vc.adjoint();
}

/// rho~_mn -> rho~_mn exp(-i (lambda_m - lambda_n) t), in place.
inline void rotate_phases(ComplexMatrix& rho_eig, const SpectralData& spec, double t) {
  const Index n = spec.dim();
  ComplexVector phase(n);
  for (Index m = 0; m < n; ++m) phase[m] = std::polar(1.0, -spec.eigenvalues[m] * t);
  for (Index c = 0; c < n; ++c) {
    const Complex pc = std::conj(phase[c]);
    for (Index r = 0; r < n; ++r) rho_eig(r, c) *= phase[r] * pc;
  }
}

/// rho(t) = e^{-iHt} rho e^{+iHt}
inline HermitianMatrix evolve(const HermitianMatrix& rho, const SpectralData& spec, double t) {
  if (rho.dim() != spec.dim()) throw DimensionError("evolve", rho.dim(), rho.dim(), spec.dim(), spec.dim());
  if (!(t >= 0.0)) throw ParameterError("evolve: t must be >= 0");
  if (t == 0.0) return rho;
  ComplexMatrix r = to_eigenbasis(rho.matrix(), spec);
  rotate_phases(r, spec, t);
  return HermitianMatrix::from_matrix(from_eigenbasis(r, spec), 1e-10);
}

namespace detail {

struct Entry {
  Index row;
  Index col;
  double value;
};

inline std::vector<Entry> nonzeros(const RealMatrix& h) {
  std::vector<Entry> out;
  for (Index c = 0; c < h.cols(); ++c)
    for (Index r = 0; r < h.rows(); ++r)
      if (h(r, c) != 0.0) out.push_back({r, c, h(r, c)});
  return out;
}

// -i[H, rho] for Hermitian rho, touching only the nonzeros of H.
inline void liouville_into(const std::vector<Entry>& h, const ComplexMatrix& rho, ComplexMatrix& rh, ComplexMatrix& out) {
  rh.setZero(rho.rows(), rho.cols());
  for (const Entry& e : h) rh.col(e.col) += e.value * rho.col(e.row);
  // [H, rho] = (rho H)^dagger - rho H
  out.noalias() = rh.adjoint();
  out -= rh;
  out *= Complex(0.0, -1.0);
}

}  // namespace detail

/// -i[H, rho]
inline ComplexMatrix liouville_rhs(const HermitianMatrix& rho, const RealMatrix& h) {
  return Complex(0.0, -1.0) * commutator(h, rho);
}

/// Classical RK4 on d rho/dt = -i[H, rho] with n = ceil(t/dt) equal steps.
inline HermitianMatrix rk4_evolve(const HermitianMatrix& rho, const RealMatrix& h, double t, double dt) {
  if (!(dt > 0.0)) throw ParameterError("rk4_evolve: dt must be > 0");
  if (!(t >= 0.0)) throw ParameterError("rk4_evolve: t must be >= 0");
  if (h.rows() != rho.dim() || h.cols() != rho.dim())
    throw DimensionError("rk4_evolve", h.rows(), h.cols(), rho.dim(), rho.dim());
  if (t == 0.0) return rho;

  const auto nz = detail::nonzeros(h);
  const auto steps = static_cast<long>(std::ceil(t / dt - 1e-12));
  const double step = t / static_cast<double>(steps);
  const Index n = rho.dim();
  ComplexMatrix y = rho.matrix();
  ComplexMatrix k1(n, n), k2(n, n), k3(n, n), k4(n, n), tmp(n, n), scratch(n, n);
  for (long i = 0; i < steps; ++i) {
    detail::liouville_into(nz, y, scratch, k1);
    tmp = y + (0.5 * step) * k1;
    detail::liouville_into(nz, tmp, scratch, k2);
    tmp = y + (0.5 * step) * k2;
    detail::liouville_into(nz, tmp, scratch, k3);
    tmp = y + step * k3;
    detail::liouville_into(nz, tmp, scratch, k4);
    y += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return HermitianMatrix::from_matrix(y, 1e-8);
}

}  // namespace qz
