#pragma once

// Finite-dimensional phase space Omega = Q x P with Q = P = R^n, its
// symplectic structure, block operators, and the real <-> complex dictionary
// z = q + i p under which J acts as multiplication by -i.

#include <stdexcept>
#include <string>

#include "pcsft/types.hpp"

namespace pcsft {

/// A point omega = (q, p) of the 2n-dimensional real phase space.
template <typename Scalar>
class PhaseVector {
 public:
  using RealVector = Vector<Scalar>;

  PhaseVector() = default;
  explicit PhaseVector(Index n) : coords_(RealVector::Zero(2 * n)) {}

  template <typename QDerived, typename PDerived>
  PhaseVector(const Eigen::MatrixBase<QDerived>& q, const Eigen::MatrixBase<PDerived>& p) {
    if (q.size() != p.size()) {
      throw std::invalid_argument("PhaseVector: q has length " + std::to_string(q.size()) +
                                  " but p has length " + std::to_string(p.size()));
    }
    coords_.resize(2 * q.size());
    coords_ << q, p;
  }

  /// Wraps stacked coordinates (q_1..q_n, p_1..p_n).
  static PhaseVector from_coordinates(RealVector coords) {
    if (coords.size() % 2 != 0) {
      throw std::invalid_argument("PhaseVector: stacked coordinates must have even length");
    }
    PhaseVector v;
    v.coords_ = std::move(coords);
    return v;
  }

  Index dim() const { return coords_.size() / 2; }
  auto q() const { return coords_.head(dim()); }
  auto p() const { return coords_.tail(dim()); }
  const RealVector& coordinates() const { return coords_; }

  Scalar squared_norm() const { return coords_.squaredNorm(); }
  Scalar norm() const { return coords_.norm(); }

  Scalar dot(const PhaseVector& other) const {
    check_same_dim(other, "dot");
    return coords_.dot(other.coords_);
  }

  void check_same_dim(const PhaseVector& other, const char* what) const {
    if (dim() != other.dim()) {
      throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                  std::to_string(dim()) + " vs " + std::to_string(other.dim()) +
                                  ")");
    }
  }

  friend PhaseVector operator+(const PhaseVector& a, const PhaseVector& b) {
    a.check_same_dim(b, "operator+");
    return from_coordinates(a.coords_ + b.coords_);
  }
  friend PhaseVector operator-(const PhaseVector& a, const PhaseVector& b) {
    a.check_same_dim(b, "operator-");
    return from_coordinates(a.coords_ - b.coords_);
  }
  friend PhaseVector operator-(const PhaseVector& a) { return from_coordinates(-a.coords_); }
  friend PhaseVector operator*(Scalar s, const PhaseVector& a) {
    return from_coordinates(s * a.coords_);
  }

 private:
  RealVector coords_;
};

/// Real linear operator on Omega, viewed through its n x n blocks
///   A = [ A11 A12 ]   A11: Q->Q, A12: P->Q
///       [ A21 A22 ]   A21: Q->P, A22: P->P
template <typename Scalar>
class BlockOperator {
 public:
  using RealMatrix = Matrix<Scalar>;

  BlockOperator() = default;

  explicit BlockOperator(RealMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() % 2 != 0) {
      throw std::invalid_argument("BlockOperator: matrix must be square with even size, got " +
                                  std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
    }
  }

  BlockOperator(const RealMatrix& a11, const RealMatrix& a12, const RealMatrix& a21,
                const RealMatrix& a22) {
    const Index n = a11.rows();
    for (const RealMatrix* b : {&a11, &a12, &a21, &a22}) {
      if (b->rows() != n || b->cols() != n) {
        throw std::invalid_argument("BlockOperator: all blocks must be " + std::to_string(n) +
                                    "x" + std::to_string(n));
      }
    }
    m_.resize(2 * n, 2 * n);
    m_ << a11, a12, a21, a22;
  }

  /// [[D, S], [-S, D]]: the general s-commuting operator.
  static BlockOperator s_commuting(const RealMatrix& d, const RealMatrix& s) {
    return BlockOperator(d, s, -s, d);
  }
  static BlockOperator identity(Index n) { return BlockOperator(RealMatrix::Identity(2 * n, 2 * n)); }
  static BlockOperator zero(Index n) { return BlockOperator(RealMatrix::Zero(2 * n, 2 * n)); }

  Index dim() const { return m_.rows() / 2; }
  auto a11() const { return m_.topLeftCorner(dim(), dim()); }
  auto a12() const { return m_.topRightCorner(dim(), dim()); }
  auto a21() const { return m_.bottomLeftCorner(dim(), dim()); }
  auto a22() const { return m_.bottomRightCorner(dim(), dim()); }
  const RealMatrix& matrix() const { return m_; }

  BlockOperator transpose() const { return BlockOperator(RealMatrix(m_.transpose())); }

  bool is_symmetric(std::optional<Scalar> tol = {}) const {
    return max_abs_entry(m_ - m_.transpose()) <= resolve_tolerance(m_, tol);
  }

  PhaseVector<Scalar> operator*(const PhaseVector<Scalar>& v) const {
    if (v.dim() != dim()) throw std::invalid_argument("BlockOperator * PhaseVector: dimension mismatch");
    return PhaseVector<Scalar>::from_coordinates(m_ * v.coordinates());
  }

  friend BlockOperator operator*(const BlockOperator& a, const BlockOperator& b) {
    a.check_same_dim(b);
    return BlockOperator(RealMatrix(a.m_ * b.m_));
  }
  friend BlockOperator operator+(const BlockOperator& a, const BlockOperator& b) {
    a.check_same_dim(b);
    return BlockOperator(RealMatrix(a.m_ + b.m_));
  }
  friend BlockOperator operator-(const BlockOperator& a, const BlockOperator& b) {
    a.check_same_dim(b);
    return BlockOperator(RealMatrix(a.m_ - b.m_));
  }
  friend BlockOperator operator*(Scalar s, const BlockOperator& a) {
    return BlockOperator(RealMatrix(s * a.m_));
  }

 private:
  void check_same_dim(const BlockOperator& other) const {
    if (dim() != other.dim()) throw std::invalid_argument("BlockOperator: dimension mismatch");
  }

  RealMatrix m_;
};

/// J = [[0, I], [-I, 0]], so J(q, p) = (p, -q).
template <typename Scalar>
Matrix<Scalar> symplectic_matrix(Index n) {
  Matrix<Scalar> j = Matrix<Scalar>::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n).setIdentity();
  j.bottomLeftCorner(n, n) = -Matrix<Scalar>::Identity(n, n);
  return j;
}

template <typename Scalar>
PhaseVector<Scalar> apply_J(const PhaseVector<Scalar>& w) {
  return PhaseVector<Scalar>(w.p(), -w.q());
}

/// w(w1, w2) = (p2, q1) - (p1, q2) = (w1, J w2).
template <typename Scalar>
Scalar symplectic_form(const PhaseVector<Scalar>& w1, const PhaseVector<Scalar>& w2) {
  w1.check_same_dim(w2, "symplectic_form");
  return w2.p().dot(w1.q()) - w1.p().dot(w2.q());
}

template <typename Scalar>
ComplexVector<Scalar> complexify(const PhaseVector<Scalar>& w) {
  ComplexVector<Scalar> z(w.dim());
  for (Index j = 0; j < w.dim(); ++j) z(j) = std::complex<Scalar>(w.q()(j), w.p()(j));
  return z;
}

template <typename Scalar>
PhaseVector<Scalar> realify(const ComplexVector<Scalar>& z) {
  return PhaseVector<Scalar>(Vector<Scalar>(z.real()), Vector<Scalar>(z.imag()));
}

/// <w1, w2> = (w1, w2) - i w(w1, w2); linear in w1, conjugate-linear in w2.
template <typename Scalar>
std::complex<Scalar> complex_scalar_product(const PhaseVector<Scalar>& w1,
                                            const PhaseVector<Scalar>& w2) {
  return {w1.dot(w2), -symplectic_form(w1, w2)};
}

/// max |AJ - JA|, the distance of A from the commutant of J.
template <typename Scalar>
Scalar s_commutator_residual(const BlockOperator<Scalar>& a) {
  const Matrix<Scalar> j = symplectic_matrix<Scalar>(a.dim());
  return max_abs_entry(Matrix<Scalar>(a.matrix() * j - j * a.matrix()));
}

template <typename Scalar>
bool is_s_commuting(const BlockOperator<Scalar>& a, std::optional<std::type_identity_t<Scalar>> tol = {}) {
  return s_commutator_residual(a) <= resolve_tolerance(a.matrix(), tol);
}

/// M = D - iS for A = [[D, S], [-S, D]]. Throws when A does not commute with J,
/// since then A is not C-linear and has no complex matrix.
template <typename Scalar>
ComplexMatrix<Scalar> to_complex_operator(const BlockOperator<Scalar>& a,
                                          std::optional<std::type_identity_t<Scalar>> tol = {}) {
  if (!is_s_commuting(a, tol)) {
    throw std::invalid_argument("to_complex_operator: operator does not commute with J (residual " +
                                std::to_string(double(s_commutator_residual(a))) + ")");
  }
  const Matrix<Scalar> d = (a.a11() + a.a22()) / Scalar(2);
  const Matrix<Scalar> s = (a.a12() - a.a21()) / Scalar(2);
  ComplexMatrix<Scalar> m(a.dim(), a.dim());
  m.real() = d;
  m.imag() = -s;
  return m;
}

template <typename Scalar>
BlockOperator<Scalar> from_complex_operator(const ComplexMatrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("from_complex_operator: matrix must be square");
  return BlockOperator<Scalar>::s_commuting(Matrix<Scalar>(m.real()), Matrix<Scalar>(-m.imag()));
}

/// f_A(w) = 1/2 (A w, w). A is expected to be symmetric.
template <typename Scalar>
Scalar quadratic_form_eval(const BlockOperator<Scalar>& a, const PhaseVector<Scalar>& w) {
  return Scalar(0.5) * w.coordinates().dot(a.matrix() * w.coordinates());
}

using PhaseVectord = PhaseVector<double>;
using BlockOperatord = BlockOperator<double>;

}  // namespace pcsft
