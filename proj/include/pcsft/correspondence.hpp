#pragma once

// Classical -> quantum correspondence:
//   states:     rho  -> Bc / 2h        (density operator)
//   variables:  f    -> h * f''(0)     (as a complex matrix)
// Classical averages of polynomial variables are computed exactly with Wick's
// theorem up to products of three quadratic forms, or by Monte Carlo.

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "pcsft/gaussian_state.hpp"
#include "pcsft/polynomial_variable.hpp"

namespace pcsft {

/// Hermitian, positive semidefinite, unit trace.
template <typename Scalar>
class DensityOperator {
 public:
  using CMatrix = ComplexMatrix<Scalar>;

  explicit DensityOperator(CMatrix d, Scalar tol = Scalar(1e-10)) : d_(std::move(d)) {
    if (d_.rows() != d_.cols()) throw std::invalid_argument("DensityOperator: matrix must be square");
    if (!is_hermitian(d_, tol)) throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
    d_ = (d_ + d_.adjoint()).eval() / Scalar(2);
    if (std::abs(d_.trace().real() - Scalar(1)) > tol) {
      throw std::domain_error("DensityOperator: trace " + std::to_string(double(d_.trace().real())) +
                              " differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(d_, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -tol) throw std::domain_error("DensityOperator: matrix is indefinite");
  }

  Index dim() const { return d_.rows(); }
  const CMatrix& matrix() const { return d_; }

 private:
  CMatrix d_;
};

template <typename Scalar>
class QuantumObservable {
 public:
  using CMatrix = ComplexMatrix<Scalar>;

  explicit QuantumObservable(CMatrix m, std::optional<Scalar> tol = {}) : m_(std::move(m)) {
    if (!is_hermitian(m_, tol)) throw std::invalid_argument("QuantumObservable: matrix is not Hermitian");
  }

  Index dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }

 private:
  CMatrix m_;
};

/// T(rho) = Bc / 2h. Requires a symplectically invariant state of dispersion
/// 2h (relative tolerance `tol`).
template <typename Scalar>
DensityOperator<Scalar> quantize_state(const GaussianState<Scalar>& rho, Scalar h,
                                       Scalar tol = Scalar(1e-10)) {
  if (!(h > Scalar(0))) throw std::invalid_argument("quantize_state: h must be positive");
  if (!is_symplectically_invariant(rho)) {
    throw std::domain_error("quantize_state: state is not symplectically invariant");
  }
  const Scalar sigma2 = dispersion(rho);
  if (std::abs(sigma2 - Scalar(2) * h) > tol * Scalar(2) * h) {
    throw std::domain_error("quantize_state: dispersion " + std::to_string(double(sigma2)) +
                            " differs from 2h = " + std::to_string(double(2 * h)));
  }
  return DensityOperator<Scalar>(complex_covariance(rho).matrix() / (Scalar(2) * h));
}

template <typename Scalar>
struct UnnormalizedDensity {
  ComplexMatrix<Scalar> matrix;
  Scalar trace_defect;  // Tr - 1
};

/// Tolerant variant for states with dispersion 2h + o(h): returns Bc / 2h and
/// how far its trace is from one.
template <typename Scalar>
UnnormalizedDensity<Scalar> quantize_state_tolerant(const GaussianState<Scalar>& rho, Scalar h) {
  if (!(h > Scalar(0))) throw std::invalid_argument("quantize_state_tolerant: h must be positive");
  if (!is_symplectically_invariant(rho)) {
    throw std::domain_error("quantize_state_tolerant: state is not symplectically invariant");
  }
  ComplexMatrix<Scalar> d = complex_covariance(rho).matrix() / (Scalar(2) * h);
  const Scalar defect = d.trace().real() - Scalar(1);
  return {std::move(d), defect};
}

/// Inverse of quantize_state: the invariant state with Bc = 2h D.
template <typename Scalar>
GaussianState<Scalar> dequantize_state(const DensityOperator<Scalar>& d, Scalar h) {
  if (!(h > Scalar(0))) throw std::invalid_argument("dequantize_state: h must be positive");
  return from_complex_covariance(ComplexCovariance<Scalar>(ComplexMatrix<Scalar>(Scalar(2) * h * d.matrix())));
}

/// T(f) = h f''(0), as the complex matrix of the s-commuting Hessian.
template <typename Scalar>
QuantumObservable<Scalar> quantize_variable(const PolynomialVariable<Scalar>& f, Scalar h) {
  return QuantumObservable<Scalar>(ComplexMatrix<Scalar>(h * to_complex_operator(f.second_derivative_at_zero())));
}

/// Re Tr(D M).
template <typename Scalar>
Scalar quantum_average(const DensityOperator<Scalar>& d, const QuantumObservable<Scalar>& m) {
  if (d.dim() != m.dim()) throw std::invalid_argument("quantum_average: dimension mismatch");
  return (d.matrix() * m.matrix()).trace().real();
}

/// Exact E_rho[f] by Wick's theorem. With Q_i = (A_i w, w) and covariance B,
///   E[Q1]       = t1
///   E[Q1 Q2]    = t1 t2 + 2 p12
///   E[Q1 Q2 Q3] = t1 t2 t3 + 2 (t1 p23 + t2 p13 + t3 p12) + 8 c123
/// where t_i = Tr(A_i B), p_ij = Tr(A_i B A_j B), c123 = Tr(A1 B A2 B A3 B).
/// Each quadratic factor carries 1/2.
template <typename Scalar>
Scalar classical_average_exact(const PolynomialVariable<Scalar>& f, const GaussianState<Scalar>& rho) {
  if (f.dim() != rho.dim()) throw std::invalid_argument("classical_average_exact: dimension mismatch");
  const Matrix<Scalar>& b = rho.covariance();
  Scalar total = 0;
  for (const auto& term : f.terms()) {
    const std::size_t k = term.factors.size();
    if (k > 3) {
      throw std::domain_error("classical_average_exact: terms with more than three quadratic factors "
                              "are not supported; use classical_average_mc");
    }
    std::vector<Matrix<Scalar>> ab;
    for (const auto& a : term.factors) ab.push_back(a.matrix() * b);
    auto tr = [&](std::size_t i) { return ab[i].trace(); };
    auto tr2 = [&](std::size_t i, std::size_t j) { return (ab[i] * ab[j]).trace(); };
    Scalar moment = 0;
    if (k == 1) {
      moment = tr(0) / Scalar(2);
    } else if (k == 2) {
      moment = (tr(0) * tr(1) + Scalar(2) * tr2(0, 1)) / Scalar(4);
    } else {
      const Scalar c = (ab[0] * ab[1] * ab[2]).trace();
      moment = (tr(0) * tr(1) * tr(2) +
                Scalar(2) * (tr(0) * tr2(1, 2) + tr(1) * tr2(0, 2) + tr(2) * tr2(0, 1)) +
                Scalar(8) * c) /
               Scalar(8);
    }
    total += term.coefficient * moment;
  }
  return total;
}

template <typename Scalar>
struct MonteCarloAverage {
  Scalar estimate;
  Scalar standard_error;
};

template <typename Scalar>
MonteCarloAverage<Scalar> classical_average_mc(const PolynomialVariable<Scalar>& f,
                                               const GaussianState<Scalar>& rho, std::size_t samples,
                                               std::uint64_t seed, const MonteCarloOptions& opts = {}) {
  if (samples < 2) throw std::invalid_argument("classical_average_mc: need at least two samples");
  if (f.dim() != rho.dim()) throw std::invalid_argument("classical_average_mc: dimension mismatch");
  if (f.terms().empty()) return {Scalar(0), Scalar(0)};
  auto moments = run_partitioned<Scalar>(samples, seed, 1, 1, opts, [&](RandomStream& rng) {
    typename RunningMoments<Scalar>::Array out(1, 1);
    out(0, 0) = f(sample(rho, rng));
    return out;
  });
  return {moments.mean()(0, 0), moments.standard_error()(0, 0)};
}

struct LogLogFit {
  double slope = 0;
  double intercept = 0;
  double r2 = 0;
};

/// Ordinary least squares of log y on log x.
inline LogLogFit fit_loglog(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_loglog: need matching samples");
  const double m = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) throw std::invalid_argument("fit_loglog: values must be positive");
    sx += std::log(x[i]);
    sy += std::log(y[i]);
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx, dy = std::log(y[i]) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0) throw std::invalid_argument("fit_loglog: x values are all equal");
  LogLogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

struct ScalingRow {
  double h;
  double classical;
  double quantum;
  double abs_error;
};

struct ScalingStudy {
  std::vector<ScalingRow> rows;
  std::optional<LogLogFit> fit;  // empty when fewer than three errors clear the floor
  bool exact = false;            // every error is at the numerical floor
};

/// Errors at or below this are treated as roundoff and excluded from the fit.
inline constexpr double kScalingErrorFloor = 1e-13;

/// Classical vs quantum averages of f along rho_h = dequantize_state(D0, h).
/// The quantum value h Tr(D0 f''(0)) is exact for quadratic f; the gap comes
/// from the higher-order terms.
inline ScalingStudy h_scaling_study(const PolynomialVariable<double>& f, const DensityOperator<double>& d0,
                                    std::span<const double> h_values) {
  if (h_values.empty()) throw std::invalid_argument("h_scaling_study: empty h grid");
  for (std::size_t i = 0; i < h_values.size(); ++i) {
    if (!(h_values[i] > 0)) throw std::invalid_argument("h_scaling_study: h values must be positive");
    if (i > 0 && !(h_values[i] < h_values[i - 1])) {
      throw std::invalid_argument("h_scaling_study: h values must be strictly descending");
    }
  }
  ScalingStudy study;
  std::vector<double> hs, errs;
  for (const double h : h_values) {
    const GaussianState<double> rho = dequantize_state(d0, h);
    ScalingRow row{h, classical_average_exact(f, rho), quantum_average(d0, quantize_variable(f, h)), 0.0};
    row.abs_error = std::abs(row.classical - row.quantum);
    study.rows.push_back(row);
    if (row.abs_error > kScalingErrorFloor) {
      hs.push_back(h);
      errs.push_back(row.abs_error);
    }
  }
  study.exact = hs.empty();
  if (hs.size() >= 3) study.fit = fit_loglog(hs, errs);
  return study;
}

using DensityOperatord = DensityOperator<double>;
using QuantumObservabled = QuantumObservable<double>;

}  // namespace pcsft
