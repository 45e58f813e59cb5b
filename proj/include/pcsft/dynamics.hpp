#pragma once

// Linear Hamiltonian flows U_t = exp(J H t / h) and their liftings:
//   point:        w   -> U_t w
//   variables:    A   -> U_t^T A U_t        (Heisenberg)
//   measures:     B   -> U_t B U_t^T        (von Neumann)
// and the complexified Schroedinger flow exp(-i M t / h).

#include <stdexcept>

#include "pcsft/expm.hpp"
#include "pcsft/gaussian_state.hpp"
#include "pcsft/polynomial_variable.hpp"

namespace pcsft {

template <typename Scalar>
class FlowOperator {
 public:
  FlowOperator(Matrix<Scalar> u, Scalar t, Scalar h, BlockOperator<Scalar> generator)
      : u_(std::move(u)), t_(t), h_(h), generator_(std::move(generator)) {}

  const Matrix<Scalar>& matrix() const { return u_; }
  Scalar time() const { return t_; }
  Scalar scale() const { return h_; }
  const BlockOperator<Scalar>& generator() const { return generator_; }
  Index dim() const { return generator_.dim(); }

 private:
  Matrix<Scalar> u_;
  Scalar t_;
  Scalar h_;
  BlockOperator<Scalar> generator_;
};

/// Flow of the Hamilton function 1/(2h) (H w, w). Use h = 1 for the unscaled
/// equations w' = J H w.
template <typename Scalar>
FlowOperator<Scalar> make_flow(const BlockOperator<Scalar>& h_op, Scalar t, Scalar h = 1) {
  if (!(h > Scalar(0))) throw std::invalid_argument("make_flow: h must be positive");
  if (!h_op.is_symmetric()) throw std::invalid_argument("make_flow: generator must be symmetric");
  const Matrix<Scalar> j = symplectic_matrix<Scalar>(h_op.dim());
  const Matrix<Scalar> generator = (j * h_op.matrix()) * (t / h);
  return FlowOperator<Scalar>(matrix_exponential(generator), t, h, h_op);
}

template <typename Scalar>
PhaseVector<Scalar> evolve_point(const FlowOperator<Scalar>& u, const PhaseVector<Scalar>& w) {
  if (w.dim() != u.dim()) throw std::invalid_argument("evolve_point: dimension mismatch");
  return PhaseVector<Scalar>::from_coordinates(u.matrix() * w.coordinates());
}

/// exp(-i M t / h) for Hermitian M.
template <typename Scalar>
ComplexMatrix<Scalar> complex_flow(const ComplexMatrix<Scalar>& m, Scalar t, Scalar h = 1) {
  if (!(h > Scalar(0))) throw std::invalid_argument("complex_flow: h must be positive");
  if (!is_hermitian(m)) throw std::invalid_argument("complex_flow: operator is not Hermitian");
  const std::complex<Scalar> factor(0, -t / h);
  return matrix_exponential(ComplexMatrix<Scalar>(factor * m));
}

template <typename Scalar>
BlockOperator<Scalar> heisenberg_lift(const BlockOperator<Scalar>& a, const FlowOperator<Scalar>& u) {
  if (a.dim() != u.dim()) throw std::invalid_argument("heisenberg_lift: dimension mismatch");
  const Matrix<Scalar> at = u.matrix().transpose() * a.matrix() * u.matrix();
  return BlockOperator<Scalar>(Matrix<Scalar>((at + at.transpose()) / Scalar(2)));
}

/// Covariance of the pushforward of rho along the flow.
template <typename Scalar>
GaussianState<Scalar> vonneumann_lift(const GaussianState<Scalar>& rho, const FlowOperator<Scalar>& u) {
  if (rho.dim() != u.dim()) throw std::invalid_argument("vonneumann_lift: dimension mismatch");
  const Matrix<Scalar> bt = u.matrix() * rho.covariance() * u.matrix().transpose();
  return GaussianState<Scalar>(Matrix<Scalar>((bt + bt.transpose()) / Scalar(2)));
}

/// {f, g}(w) = (grad f, J grad g) = w(grad f, grad g).
template <typename Scalar>
Scalar poisson_bracket(const PolynomialVariable<Scalar>& f, const PolynomialVariable<Scalar>& g,
                       const PhaseVector<Scalar>& w) {
  return symplectic_form(f.gradient(w), g.gradient(w));
}

template <typename Scalar>
struct EnsembleEstimate {
  ComplexCovariance<Scalar> covariance;
  Matrix<Scalar> real_standard_error;
  Matrix<Scalar> imag_standard_error;
};

/// Schroedinger evolution with random initial fields: draws xi_0 ~ rho0,
/// propagates each by exp(-i M t / h), returns the empirical E[xi_t xi_t^*].
template <typename Scalar>
EnsembleEstimate<Scalar> ensemble_evolve(const GaussianState<Scalar>& rho0, const ComplexMatrix<Scalar>& m,
                                         Scalar t, Scalar h, std::size_t samples, std::uint64_t seed,
                                         const MonteCarloOptions& opts = {}) {
  if (samples < 2) throw std::invalid_argument("ensemble_evolve: need at least two samples");
  if (m.rows() != rho0.dim() || m.cols() != rho0.dim()) {
    throw std::invalid_argument("ensemble_evolve: dimension mismatch");
  }
  const ComplexMatrix<Scalar> v = complex_flow(m, t, h);
  const Index n = rho0.dim();
  auto moments = run_partitioned<Scalar>(samples, seed, n, 2 * n, opts, [&](RandomStream& rng) {
    const ComplexVector<Scalar> z = v * complexify(sample(rho0, rng));
    const ComplexMatrix<Scalar> outer = z * z.adjoint();
    typename RunningMoments<Scalar>::Array out(n, 2 * n);
    out.leftCols(n) = outer.real().array();
    out.rightCols(n) = outer.imag().array();
    return out;
  });
  ComplexMatrix<Scalar> bc(n, n);
  bc.real() = moments.mean().leftCols(n).matrix();
  bc.imag() = moments.mean().rightCols(n).matrix();
  const Matrix<Scalar> se = moments.standard_error().matrix();
  return {ComplexCovariance<Scalar>(std::move(bc)), se.leftCols(n), se.rightCols(n)};
}

using FlowOperatord = FlowOperator<double>;

}  // namespace pcsft
