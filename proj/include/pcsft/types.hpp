#pragma once

#include <complex>
#include <optional>
#include <type_traits>

#include <Eigen/Dense>

namespace pcsft {

using Index = Eigen::Index;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using ComplexVector = Vector<std::complex<Scalar>>;

/// Complex n x n matrix. Images of s-commuting operators and complex
/// covariances live here.
template <typename Scalar>
using ComplexMatrix = Matrix<std::complex<Scalar>>;

template <typename Derived>
typename Derived::RealScalar max_abs_entry(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Derived::RealScalar;
  return m.size() == 0 ? Real(0) : m.cwiseAbs().maxCoeff();
}

/// Structural predicates (symmetry, s-commutation, hermiticity) compare
/// entries against 1e-10 times the largest entry unless the caller overrides.
template <typename Derived>
typename Derived::RealScalar resolve_tolerance(
    const Eigen::MatrixBase<Derived>& m,
    std::optional<typename Derived::RealScalar> tol) {
  using Real = typename Derived::RealScalar;
  return tol ? *tol : Real(1e-10) * max_abs_entry(m);
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m,
                  std::optional<typename Derived::RealScalar> tol = {}) {
  if (m.rows() != m.cols()) return false;
  return max_abs_entry(m - m.adjoint()) <= resolve_tolerance(m, tol);
}

}  // namespace pcsft
