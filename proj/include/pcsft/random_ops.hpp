#pragma once

// Random instances of the model's objects, used by the property suites and by
// the CLI's seeded generator shortcuts.

#include "pcsft/gaussian_state.hpp"

namespace pcsft {

template <typename Scalar>
Matrix<Scalar> random_matrix(Index rows, Index cols, RandomStream& rng) {
  Matrix<Scalar> m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = Scalar(rng.normal());
  return m;
}

template <typename Scalar>
PhaseVector<Scalar> random_phase_vector(Index n, RandomStream& rng) {
  return PhaseVector<Scalar>::from_coordinates(rng.normal_vector<Scalar>(2 * n));
}

/// Generic symmetric operator; almost surely not s-commuting.
template <typename Scalar>
BlockOperator<Scalar> random_symmetric(Index n, RandomStream& rng, Scalar scale = 1) {
  const Matrix<Scalar> g = random_matrix<Scalar>(2 * n, 2 * n, rng);
  return BlockOperator<Scalar>(Matrix<Scalar>(scale * (g + g.transpose()) / Scalar(2)));
}

/// s-commuting, not necessarily symmetric.
template <typename Scalar>
BlockOperator<Scalar> random_s_commuting(Index n, RandomStream& rng, Scalar scale = 1) {
  const Matrix<Scalar> d = random_matrix<Scalar>(n, n, rng);
  const Matrix<Scalar> s = random_matrix<Scalar>(n, n, rng);
  return BlockOperator<Scalar>::s_commuting(Matrix<Scalar>(scale * d), Matrix<Scalar>(scale * s));
}

/// Symmetric s-commuting: D symmetric, S antisymmetric.
template <typename Scalar>
BlockOperator<Scalar> random_s_commuting_symmetric(Index n, RandomStream& rng, Scalar scale = 1) {
  const Matrix<Scalar> g = random_matrix<Scalar>(n, n, rng);
  const Matrix<Scalar> k = random_matrix<Scalar>(n, n, rng);
  const Matrix<Scalar> d = scale * (g + g.transpose()) / Scalar(2);
  const Matrix<Scalar> s = scale * (k - k.transpose()) / Scalar(2);
  return BlockOperator<Scalar>::s_commuting(d, s);
}

/// Symmetric s-commuting and positive definite (eigenvalues in [1, 1 + scale]).
template <typename Scalar>
BlockOperator<Scalar> random_s_commuting_positive(Index n, RandomStream& rng, Scalar scale = 1) {
  const ComplexMatrix<Scalar> g(random_matrix<Scalar>(n, n, rng).template cast<std::complex<Scalar>>() +
                                std::complex<Scalar>(0, 1) *
                                    random_matrix<Scalar>(n, n, rng).template cast<std::complex<Scalar>>());
  Eigen::HouseholderQR<ComplexMatrix<Scalar>> qr(g);
  const ComplexMatrix<Scalar> q = qr.householderQ();
  Vector<Scalar> lambda(n);
  for (Index i = 0; i < n; ++i) lambda(i) = Scalar(1) + scale * Scalar(rng.uniform(0.0, 1.0));
  const ComplexMatrix<Scalar> m = q * lambda.template cast<std::complex<Scalar>>().asDiagonal() * q.adjoint();
  return from_complex_operator<Scalar>((m + m.adjoint()) / Scalar(2));
}

template <typename Scalar>
ComplexVector<Scalar> random_unit_vector(Index n, RandomStream& rng) {
  ComplexVector<Scalar> z(n);
  for (Index i = 0; i < n; ++i) z(i) = {Scalar(rng.normal()), Scalar(rng.normal())};
  return z / z.norm();
}

/// Hermitian PSD matrix G G^* / n with a complex Gaussian G.
template <typename Scalar>
ComplexMatrix<Scalar> random_hermitian_psd(Index n, RandomStream& rng) {
  ComplexMatrix<Scalar> g(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) g(i, j) = {Scalar(rng.normal()), Scalar(rng.normal())};
  ComplexMatrix<Scalar> m = g * g.adjoint() / Scalar(n);
  return (m + m.adjoint()) / Scalar(2);
}

template <typename Scalar>
ComplexMatrix<Scalar> random_hermitian(Index n, RandomStream& rng) {
  ComplexMatrix<Scalar> g(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) g(i, j) = {Scalar(rng.normal()), Scalar(rng.normal())};
  return (g + g.adjoint()) / Scalar(2);
}

/// Random density matrix (Hermitian, PSD, unit trace).
template <typename Scalar>
ComplexMatrix<Scalar> random_density_matrix(Index n, RandomStream& rng) {
  const ComplexMatrix<Scalar> m = random_hermitian_psd<Scalar>(n, rng);
  return m / m.trace().real();
}

/// Generic real PSD covariance G G^T / 2n on the 2n-dimensional phase space.
template <typename Scalar>
Matrix<Scalar> random_psd_covariance(Index n, RandomStream& rng) {
  const Matrix<Scalar> g = random_matrix<Scalar>(2 * n, 2 * n, rng);
  Matrix<Scalar> b = g * g.transpose() / Scalar(2 * n);
  return (b + b.transpose()) / Scalar(2);
}

/// Symplectically invariant state with dispersion 2h.
template <typename Scalar>
GaussianState<Scalar> random_invariant_state(Index n, Scalar h, RandomStream& rng) {
  const ComplexMatrix<Scalar> d = random_density_matrix<Scalar>(n, rng);
  return from_complex_covariance(ComplexCovariance<Scalar>(ComplexMatrix<Scalar>(Scalar(2) * h * d)));
}

}  // namespace pcsft
