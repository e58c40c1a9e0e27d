#pragma once

#include <Eigen/Dense>

#include <cmath>

#include "bclm/types.hpp"

// Dense complex Hermitian kernel: eigendecomposition, nuclear norm, PSD
// projection and checks, inner products. Everything here is a pure function
// of its arguments; matrices are value types.

namespace bclm {

// Relative tolerance for accepting a matrix as Hermitian.
inline constexpr double kHermTol = 1e-8;
// Relative tolerance for eigendecomposition reconstruction checks.
inline constexpr double kReconTol = 1e-10;

/// (M + M^H) / 2
template <typename Derived>
CMatrix hermitian_part(const Eigen::MatrixBase<Derived>& m) {
  return 0.5 * (m.derived().template cast<Complex>() +
                m.derived().template cast<Complex>().adjoint());
}

/// ||M - M^H||_F / max(1, ||M||_F)
template <typename Derived>
double hermiticity_error(const Eigen::MatrixBase<Derived>& m) {
  const CMatrix mc = m.derived().template cast<Complex>();
  return (mc - mc.adjoint()).norm() / std::max(1.0, mc.norm());
}

struct EigenDecomposition {
  RVector eigenvalues;   // ascending
  CMatrix eigenvectors;  // unitary, columns match eigenvalues
};

/// Eigendecomposition of a Hermitian matrix. Throws NonHermitianInput if the
/// symmetry violation exceeds kHermTol; the input is symmetrized before the
/// solve so rounding drift does not accumulate.
inline EigenDecomposition eig(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("eig: matrix is not square");
  }
  if (hermiticity_error(m) > kHermTol) {
    throw NonHermitianInput("eig: input is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(m));
  return {es.eigenvalues(), es.eigenvectors()};
}

/// Sum of absolute eigenvalues; equals the sum of singular values for
/// Hermitian input.
inline double nuclear_norm(const CMatrix& m) {
  return eig(m).eigenvalues.cwiseAbs().sum();
}

/// True iff the minimum eigenvalue is >= -tol.
inline bool is_psd(const CMatrix& m, double tol) {
  return eig(m).eigenvalues.minCoeff() >= -tol;
}

/// Frobenius-nearest positive semidefinite matrix (eigenvalues clipped at 0).
inline CMatrix psd_project(const CMatrix& m) {
  EigenDecomposition ed = eig(m);
  const RVector clipped = ed.eigenvalues.cwiseMax(0.0);
  return ed.eigenvectors * clipped.asDiagonal() * ed.eigenvectors.adjoint();
}

/// Re trace(A * B); real for Hermitian A, B. Throws DimensionMismatch.
template <typename DA, typename DB>
double frob_inner(const Eigen::MatrixBase<DA>& a,
                  const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw DimensionMismatch("frob_inner: dimension mismatch");
  }
  // trace(A B) = sum_ij A(i,j) B(j,i)
  return a.derived()
      .template cast<Complex>()
      .cwiseProduct(b.derived().template cast<Complex>().transpose())
      .sum()
      .real();
}

}  // namespace bclm
