#pragma once

// Zero-mean Gaussian measures on phase space, described by their real
// covariance B (2n x 2n) and complex covariance Bc = E[z z^*] (n x n), where
// z = q + i p. The blocks are related by
//   Bc = D - iS,  D = B11 + B22,  S = B12 - B21.

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "pcsft/phase_space.hpp"
#include "pcsft/random.hpp"

namespace pcsft {

/// Zero-mean Gaussian measure rho = N(0, B). The type admits no mean field.
template <typename Scalar>
class GaussianState {
 public:
  using RealMatrix = Matrix<Scalar>;

  GaussianState() = default;

  /// Validates symmetry and positive semidefiniteness of B. Eigenvalues in
  /// [-tol, 0) are treated as zero (rank-deficient states such as pure
  /// states); anything below -tol is rejected.
  explicit GaussianState(RealMatrix covariance, std::optional<Scalar> tol = {})
      : b_(std::move(covariance)) {
    if (b_.rows() != b_.cols() || b_.rows() % 2 != 0) {
      throw std::invalid_argument("GaussianState: covariance must be square with even size");
    }
    const Scalar eps = resolve_tolerance(b_, tol);
    if (max_abs_entry(RealMatrix(b_ - b_.transpose())) > eps) {
      throw std::invalid_argument("GaussianState: covariance is not symmetric");
    }
    if (!b_.allFinite()) throw std::invalid_argument("GaussianState: covariance has non-finite entries");
    b_ = (b_ + b_.transpose()).eval() / Scalar(2);

    Eigen::SelfAdjointEigenSolver<RealMatrix> eig(b_);
    Vector<Scalar> lambda = eig.eigenvalues();
    if (lambda.size() > 0 && lambda.minCoeff() < -eps) {
      throw std::domain_error("GaussianState: covariance is indefinite (smallest eigenvalue " +
                              std::to_string(double(lambda.minCoeff())) + ")");
    }
    lambda = lambda.cwiseMax(Scalar(0));
    factor_ = eig.eigenvectors() * lambda.cwiseSqrt().asDiagonal();
  }

  Index dim() const { return b_.rows() / 2; }
  const RealMatrix& covariance() const { return b_; }

  /// F with F F^T = B; sampling maps standard normals through F.
  const RealMatrix& factor() const { return factor_; }

  auto b11() const { return b_.topLeftCorner(dim(), dim()); }
  auto b12() const { return b_.topRightCorner(dim(), dim()); }
  auto b21() const { return b_.bottomLeftCorner(dim(), dim()); }
  auto b22() const { return b_.bottomRightCorner(dim(), dim()); }

 private:
  RealMatrix b_;
  RealMatrix factor_;
};

/// Hermitian positive semidefinite n x n complex covariance.
template <typename Scalar>
class ComplexCovariance {
 public:
  using CMatrix = ComplexMatrix<Scalar>;

  ComplexCovariance() = default;

  explicit ComplexCovariance(CMatrix bc, std::optional<Scalar> tol = {}) : bc_(std::move(bc)) {
    if (bc_.rows() != bc_.cols()) throw std::invalid_argument("ComplexCovariance: matrix must be square");
    if (!bc_.allFinite()) throw std::invalid_argument("ComplexCovariance: non-finite entries");
    const Scalar eps = resolve_tolerance(bc_, tol);
    if (!is_hermitian(bc_, eps)) throw std::invalid_argument("ComplexCovariance: matrix is not Hermitian");
    bc_ = (bc_ + bc_.adjoint()).eval() / Scalar(2);
    if (bc_.size() > 0) {
      Eigen::SelfAdjointEigenSolver<CMatrix> eig(bc_, Eigen::EigenvaluesOnly);
      if (eig.eigenvalues().minCoeff() < -eps) {
        throw std::domain_error("ComplexCovariance: matrix is indefinite");
      }
    }
  }

  Index dim() const { return bc_.rows(); }
  const CMatrix& matrix() const { return bc_; }
  Scalar trace() const { return bc_.trace().real(); }

 private:
  CMatrix bc_;
};

/// sigma^2(rho) = Tr B = E|w|^2.
template <typename Scalar>
Scalar dispersion(const GaussianState<Scalar>& rho) {
  return rho.covariance().trace();
}

template <typename Scalar>
PhaseVector<Scalar> sample(const GaussianState<Scalar>& rho, RandomStream& rng) {
  const Vector<Scalar> xi = rng.normal_vector<Scalar>(rho.factor().cols());
  return PhaseVector<Scalar>::from_coordinates(rho.factor() * xi);
}

template <typename Scalar>
ComplexCovariance<Scalar> complex_covariance(const GaussianState<Scalar>& rho) {
  const Index n = rho.dim();
  ComplexMatrix<Scalar> bc(n, n);
  bc.real() = rho.b11() + rho.b22();
  bc.imag() = -(rho.b12() - rho.b21());
  return ComplexCovariance<Scalar>(std::move(bc));
}

/// A zero-mean Gaussian is invariant under the pushforward by J exactly when
/// its covariance commutes with J, i.e. J B J^T = B.
template <typename Scalar>
bool is_symplectically_invariant(const GaussianState<Scalar>& rho, std::optional<std::type_identity_t<Scalar>> tol = {}) {
  return is_s_commuting(BlockOperator<Scalar>(rho.covariance()), tol);
}

/// The unique symplectically invariant state with the given complex
/// covariance: B11 = B22 = Re(Bc)/2, B12 = -B21 = -Im(Bc)/2.
template <typename Scalar>
GaussianState<Scalar> from_complex_covariance(const ComplexCovariance<Scalar>& bc) {
  const Matrix<Scalar> re = bc.matrix().real() / Scalar(2);
  const Matrix<Scalar> im = bc.matrix().imag() / Scalar(2);
  return GaussianState<Scalar>(BlockOperator<Scalar>::s_commuting(re, Matrix<Scalar>(-im)).matrix());
}

/// Pure-state measure for a unit vector psi: complex covariance 2h psi psi^*,
/// real covariance of rank two with eigenvalues {h, h}, dispersion 2h.
template <typename Scalar>
GaussianState<Scalar> pure_state_covariance(const ComplexVector<Scalar>& psi, Scalar h) {
  if (!(h > Scalar(0))) throw std::invalid_argument("pure_state_covariance: h must be positive");
  if (std::abs(psi.norm() - Scalar(1)) > Scalar(1e-10)) {
    throw std::invalid_argument("pure_state_covariance: psi is not normalized (norm " +
                                std::to_string(double(psi.norm())) + ")");
  }
  ComplexMatrix<Scalar> bc = Scalar(2) * h * (psi * psi.adjoint());
  return from_complex_covariance(ComplexCovariance<Scalar>(std::move(bc)));
}

/// Entrywise Monte Carlo estimate of E[w w^T] with known zero mean.
template <typename Scalar>
struct CovarianceEstimate {
  Matrix<Scalar> mean;
  Matrix<Scalar> standard_error;
};

template <typename Scalar>
CovarianceEstimate<Scalar> estimate_covariance(const GaussianState<Scalar>& rho, std::size_t samples,
                                               std::uint64_t seed, const MonteCarloOptions& opts = {}) {
  const Index dim = 2 * rho.dim();
  auto moments = run_partitioned<Scalar>(samples, seed, dim, dim, opts, [&](RandomStream& rng) {
    const Vector<Scalar> w = sample(rho, rng).coordinates();
    return typename RunningMoments<Scalar>::Array((w * w.transpose()).array());
  });
  return {moments.mean().matrix(), moments.standard_error().matrix()};
}

using GaussianStated = GaussianState<double>;
using ComplexCovarianced = ComplexCovariance<double>;

}  // namespace pcsft
