#include "pcsft/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "pcsft/correspondence.hpp"
#include "pcsft/dynamics.hpp"
#include "pcsft/random_ops.hpp"

namespace pcsft {
namespace {

using Mat = Matrix<double>;
using CMat = ComplexMatrix<double>;

constexpr double kTiny = std::numeric_limits<double>::min();
constexpr double kFdStep = 1e-5;

template <typename A, typename B>
double rel_diff(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  const double scale = std::max({max_abs_entry(a), max_abs_entry(b), kTiny});
  return max_abs_entry(a - b) / scale;
}

double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), kTiny});
  return std::abs(a - b) / scale;
}

double rel_diff(std::complex<double> a, std::complex<double> b) {
  const double scale = std::max({std::abs(a), std::abs(b), kTiny});
  return std::abs(a - b) / scale;
}

CheckResult at_most(std::string name, double residual, double threshold, std::string detail = {}) {
  return {std::move(name), residual <= threshold, residual, threshold, std::move(detail)};
}

struct Context {
  const VerifyOptions& opts;
  RandomStream rng;
  Index n() const { return opts.n; }
  double h() const { return opts.h; }
};

CheckResult block_form(Context& c) {
  double residual = 0;
  int disagreements = 0;
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const auto a = random_s_commuting<double>(c.n(), c.rng);
    residual = std::max(residual, s_commutator_residual(a) / max_abs_entry(a.matrix()));
    const auto g = BlockOperatord(random_matrix<double>(2 * c.n(), 2 * c.n(), c.rng));
    for (const auto* op : {&a, &g}) {
      const bool blocks = max_abs_entry(Mat(op->a11() - op->a22())) <= 1e-10 * max_abs_entry(op->matrix()) &&
                          max_abs_entry(Mat(op->a12() + op->a21())) <= 1e-10 * max_abs_entry(op->matrix());
      if (blocks != is_s_commuting(*op)) ++disagreements;
    }
  }
  if (disagreements > 0) residual = std::max(residual, 1.0);
  return at_most("s_commuting_block_form", residual, 1e-12,
                 "block criterion disagreements: " + std::to_string(disagreements));
}

CheckResult algebra_closure(Context& c) {
  double residual = 0;
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const auto a = random_s_commuting<double>(c.n(), c.rng);
    const auto b = random_s_commuting<double>(c.n(), c.rng);
    for (const auto& op : {a + b, a * b}) {
      residual = std::max(residual, s_commutator_residual(op) / max_abs_entry(op.matrix()));
    }
  }
  return at_most("s_commuting_algebra_closure", residual, 1e-12);
}

CheckResult symplectic_symmetry(Context& c) {
  double residual = 0;
  double weakest_witness = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const auto a = random_s_commuting_symmetric<double>(c.n(), c.rng);
    const auto g = random_symmetric<double>(c.n(), c.rng);
    const auto w1 = random_phase_vector<double>(c.n(), c.rng);
    const auto w2 = random_phase_vector<double>(c.n(), c.rng);
    residual = std::max(residual, rel_diff(symplectic_form(a * w1, w2), symplectic_form(w1, a * w2)));
    weakest_witness =
        std::min(weakest_witness, rel_diff(symplectic_form(g * w1, w2), symplectic_form(w1, g * w2)));
  }
  if (!(weakest_witness > 1e-6)) residual = std::max(residual, 1.0);
  return at_most("symplectic_symmetry_equivalence", residual, 1e-10,
                 "smallest asymmetry for generic operators: " + std::to_string(weakest_witness));
}

CheckResult complex_linearity(Context& c) {
  double residual = 0;
  const std::complex<double> i(0, 1);
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const auto a = random_s_commuting<double>(c.n(), c.rng);
    const auto w = random_phase_vector<double>(c.n(), c.rng);
    const CMat m = to_complex_operator(a);
    residual = std::max(residual, rel_diff(complexify(a * w), m * complexify(w)));
    // A(i w) = i A(w), with i w = -J w.
    residual = std::max(residual, rel_diff(complexify(a * (-apply_J(w))), i * complexify(a * w)));
  }
  return at_most("complex_linearity", residual, 1e-12);
}

CheckResult hermitian_representation(Context& c) {
  double residual = 0;
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const auto a = random_s_commuting_symmetric<double>(c.n(), c.rng);
    const CMat m = to_complex_operator(a);
    residual = std::max(residual, max_abs_entry(CMat(m - m.adjoint())) / max_abs_entry(m));
    residual = std::max(residual, rel_diff(from_complex_operator(m).matrix(), a.matrix()));
  }
  return at_most("hermitian_representation", residual, 1e-14);
}

CheckResult flow_s_commuting(Context& c) {
  double residual = 0;
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const auto hop = random_s_commuting_symmetric<double>(c.n(), c.rng);
    const double t = c.rng.uniform(0.0, 10.0);
    const auto u = make_flow(hop, t, c.h());
    residual = std::max(residual, s_commutator_residual(BlockOperatord(u.matrix())));
  }
  return at_most("flow_s_commuting", residual, 1e-9);
}

CheckResult complexified_dynamics(Context& c) {
  double residual = 0;
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const auto hop = random_s_commuting_symmetric<double>(c.n(), c.rng);
    const double t = c.rng.uniform(0.0, 10.0);
    const auto w = random_phase_vector<double>(c.n(), c.rng);
    const auto real_path = complexify(evolve_point(make_flow(hop, t, c.h()), w));
    const ComplexVector<double> complex_path = complex_flow(to_complex_operator(hop), t, c.h()) * complexify(w);
    residual = std::max(residual, max_abs_entry(real_path - complex_path) / w.norm());
  }
  return at_most("complexified_dynamics", residual, 1e-9);
}

CheckResult norm_preservation(Context& c) {
  double residual = 0;
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const auto hop = random_s_commuting_symmetric<double>(c.n(), c.rng);
    const double t = c.rng.uniform(0.0, 10.0);
    const auto w = random_phase_vector<double>(c.n(), c.rng);
    const auto wt = evolve_point(make_flow(hop, t, c.h()), w);
    residual = std::max(residual, std::abs(wt.squared_norm() - w.squared_norm()) / w.squared_norm());
  }
  return at_most("norm_preservation", residual, 1e-9);
}

CheckResult norm_change_witness(Context& c) {
  // Smallest (over generators) of the largest relative norm change found.
  double weakest = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const auto hop = random_symmetric<double>(c.n(), c.rng);
    double best = 0;
    for (int probe = 0; probe < 100 && best <= 1e-3; ++probe) {
      const double t = c.rng.uniform(0.0, 10.0) * c.h();
      const auto w = random_phase_vector<double>(c.n(), c.rng);
      const auto wt = evolve_point(make_flow(hop, t, c.h()), w);
      best = std::max(best, std::abs(wt.squared_norm() - w.squared_norm()) / w.squared_norm());
    }
    weakest = std::min(weakest, best);
  }
  return {"norm_change_witness", weakest > 1e-3, weakest, 1e-3,
          "generic generators must change the norm by more than the threshold"};
}

CheckResult invariant_measure_covariance(Context& c) {
  double residual = 0;
  const Mat j = symplectic_matrix<double>(c.n());
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const auto rho = random_invariant_state<double>(c.n(), c.h(), c.rng);
    const Mat& b = rho.covariance();
    residual = std::max(residual, rel_diff(Mat(j * b * j.transpose()), b));
    // Characteristic functions of rho and its pushforward under J agree.
    const Vector<double> y = c.rng.normal_vector<double>(2 * c.n()) / std::sqrt(c.h());
    const Vector<double> jy = j.transpose() * y;
    residual = std::max(residual, rel_diff(std::exp(-0.5 * jy.dot(b * jy)), std::exp(-0.5 * y.dot(b * y))));
  }
  Mat split = Mat::Identity(2 * c.n(), 2 * c.n());
  split.bottomRightCorner(c.n(), c.n()) *= 2.0;
  const bool detected = !is_symplectically_invariant(GaussianStated(split));
  if (!detected) residual = std::max(residual, 1.0);
  return at_most("invariant_measure_covariance", residual, 1e-12);
}

CheckResult complex_mean_vanishes(Context& c) {
  const auto rho = random_invariant_state<double>(c.n(), c.h(), c.rng);
  const Index n = c.n();
  auto moments = run_partitioned<double>(c.opts.samples, c.rng.engine()(), 2 * n, 1, c.opts.mc, [&](RandomStream& s) {
    return RunningMoments<double>::Array(sample(rho, s).coordinates().array());
  });
  const RunningMoments<double>::Array z = (moments.mean() / moments.standard_error()).abs();
  return at_most("complex_mean_vanishes", z.maxCoeff(), 4.0, "largest |mean| in standard errors");
}

CheckResult complex_covariance_doubling(Context& c) {
  double residual = 0;
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const auto rho = random_invariant_state<double>(c.n(), c.h(), c.rng);
    const CMat bc = complex_covariance(rho).matrix();
    const auto y = random_phase_vector<double>(c.n(), c.rng);
    const auto zy = complexify(y);
    const std::complex<double> lhs = zy.dot(bc * zy);
    const double rhs = 2.0 * y.coordinates().dot(rho.covariance() * y.coordinates());
    residual = std::max(residual, rel_diff(lhs, std::complex<double>(rhs)));
    residual = std::max(residual, rel_diff(Mat(bc.real()), Mat(2.0 * rho.b11())));
    residual = std::max(residual, rel_diff(Mat(-bc.imag()), Mat(2.0 * rho.b12())));
  }
  return at_most("complex_covariance_doubling", residual, 1e-12);
}

CheckResult covariance_block_relation(Context& c) {
  // <Bc y1, y2> = E[<y1, w><w, y2>] with <y, w> = (a, w), a = y + iJy,
  // evaluated exactly against the real covariance.
  double residual = 0;
  const CMat j = symplectic_matrix<double>(c.n()).cast<std::complex<double>>();
  const std::complex<double> i(0, 1);
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const GaussianStated rho(random_psd_covariance<double>(c.n(), c.rng));
    const CMat bc = complex_covariance(rho).matrix();
    const auto y1 = random_phase_vector<double>(c.n(), c.rng);
    const auto y2 = random_phase_vector<double>(c.n(), c.rng);
    const ComplexVector<double> r1 = y1.coordinates().cast<std::complex<double>>();
    const ComplexVector<double> r2 = y2.coordinates().cast<std::complex<double>>();
    const ComplexVector<double> a1 = r1 + i * (j * r1);
    const ComplexVector<double> a2 = r2 + i * (j * r2);
    const std::complex<double> exact =
        (a1.transpose() * rho.covariance().cast<std::complex<double>>() * a2.conjugate())(0, 0);
    const std::complex<double> via_blocks = complexify(y2).dot(bc * complexify(y1));
    residual = std::max(residual, rel_diff(exact, via_blocks));
  }
  return at_most("covariance_block_relation", residual, 1e-12);
}

CheckResult trace_formula(Context& c) {
  double residual = 0;
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const bool invariant = k % 2 == 0;
    const GaussianStated rho = invariant ? random_invariant_state<double>(c.n(), c.h(), c.rng)
                                         : GaussianStated(random_psd_covariance<double>(c.n(), c.rng));
    const auto a = random_s_commuting_symmetric<double>(c.n(), c.rng);
    const double real_trace = (rho.covariance() * a.matrix()).trace();
    const std::complex<double> complex_trace = (complex_covariance(rho).matrix() * to_complex_operator(a)).trace();
    residual = std::max(residual, rel_diff(std::complex<double>(real_trace), complex_trace));
    residual = std::max(residual, rel_diff(dispersion(rho), complex_covariance(rho).trace()));
  }
  return at_most("trace_formula", residual, 1e-10);
}

CheckResult covariance_round_trip(Context& c) {
  double residual = 0;
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const ComplexCovarianced bc(random_hermitian_psd<double>(c.n(), c.rng));
    const auto rho = from_complex_covariance(bc);
    residual = std::max(residual, max_abs_entry(CMat(complex_covariance(rho).matrix() - bc.matrix())));
    if (!is_symplectically_invariant(rho)) residual = std::max(residual, 1.0);
  }
  return at_most("covariance_round_trip", residual, 0.0);
}

CheckResult pure_state_spectrum(Context& c) {
  double residual = 0;
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const auto psi = random_unit_vector<double>(c.n(), c.rng);
    const auto rho = pure_state_covariance(psi, c.h());
    Vector<double> ev = Eigen::SelfAdjointEigenSolver<Mat>(rho.covariance()).eigenvalues();
    Vector<double> expected = Vector<double>::Zero(ev.size());
    expected.tail(2).setConstant(c.h());
    residual = std::max(residual, max_abs_entry(ev - expected) / c.h());
    residual = std::max(residual, rel_diff(dispersion(rho), 2 * c.h()));
  }
  return at_most("pure_state_spectrum", residual, 1e-10);
}

CheckResult average_equality(Context& c) {
  double residual = 0;
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const auto rho = random_invariant_state<double>(c.n(), c.h(), c.rng);
    const auto f = PolynomialVariabled::quadratic(random_s_commuting_symmetric<double>(c.n(), c.rng));
    const double classical = classical_average_exact(f, rho);
    const double quantum = quantum_average(quantize_state(rho, c.h()), quantize_variable(f, c.h()));
    residual = std::max(residual, rel_diff(classical, quantum));
  }
  return at_most("average_equality", residual, 1e-10);
}

CheckResult quantization_bijection(Context& c) {
  double residual = 0;
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const DensityOperatord d(random_density_matrix<double>(c.n(), c.rng));
    residual = std::max(residual, rel_diff(quantize_state(dequantize_state(d, c.h()), c.h()).matrix(), d.matrix()));
    const CMat m = random_hermitian<double>(c.n(), c.rng);
    const auto f = PolynomialVariabled::quadratic(from_complex_operator(m), 1.0 / c.h());
    residual = std::max(residual, rel_diff(quantize_variable(f, c.h()).matrix(), m));
  }
  return at_most("quantization_bijection", residual, 1e-12);
}

CheckResult quantization_linearity(Context& c) {
  double residual = 0;
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const auto f = PolynomialVariabled::quadratic(random_s_commuting_symmetric<double>(c.n(), c.rng));
    const auto g = PolynomialVariabled::quadratic(random_s_commuting_symmetric<double>(c.n(), c.rng));
    const double a = c.rng.normal(), b = c.rng.normal();
    const CMat lhs = quantize_variable(a * f + b * g, c.h()).matrix();
    const CMat rhs = a * quantize_variable(f, c.h()).matrix() + b * quantize_variable(g, c.h()).matrix();
    residual = std::max(residual, rel_diff(lhs, rhs));
  }
  return at_most("quantization_linearity", residual, 1e-12);
}

CheckResult quantization_degeneracy(Context& c) {
  double residual = 0;
  double weakest_slope = std::numeric_limits<double>::infinity();
  const std::vector<double> grid{1e-1, 1e-2, 1e-3, 1e-4};
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const auto a = random_s_commuting_positive<double>(c.n(), c.rng);
    const auto a1 = random_s_commuting_positive<double>(c.n(), c.rng);
    const auto a2 = random_s_commuting_positive<double>(c.n(), c.rng);
    const auto f = PolynomialVariabled::quadratic(a);
    const auto g = f + PolynomialVariabled::product({a1, a2}) + PolynomialVariabled::product({a, a1, a2}, 0.1);
    residual = std::max(residual, max_abs_entry(CMat(quantize_variable(f, c.h()).matrix() -
                                                     quantize_variable(g, c.h()).matrix())));
    const DensityOperatord d0(random_density_matrix<double>(c.n(), c.rng));
    const auto study = h_scaling_study(g, d0, grid);
    weakest_slope = std::min(weakest_slope, study.fit ? study.fit->slope : 0.0);
  }
  if (!(weakest_slope >= 1.98)) residual = std::max(residual, 1.0);
  return at_most("quantization_degeneracy", residual, 0.0,
                 "smallest fitted error slope: " + std::to_string(weakest_slope));
}

CheckResult second_derivative_s_commuting(Context& c) {
  double residual = 0;
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const auto f = PolynomialVariabled::quadratic(random_s_commuting_symmetric<double>(c.n(), c.rng), c.rng.normal()) +
                   PolynomialVariabled::quadratic(random_s_commuting_symmetric<double>(c.n(), c.rng)) +
                   PolynomialVariabled::product({random_s_commuting_symmetric<double>(c.n(), c.rng),
                                                 random_s_commuting_symmetric<double>(c.n(), c.rng)});
    const auto hess = f.second_derivative_at_zero();
    residual = std::max(residual, s_commutator_residual(hess) / std::max(max_abs_entry(hess.matrix()), kTiny));
  }
  return at_most("second_derivative_s_commuting", residual, 1e-12);
}

CheckResult lifting_duality(Context& c) {
  double residual = 0;
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const GaussianStated rho(random_psd_covariance<double>(c.n(), c.rng));
    const auto a = random_s_commuting_symmetric<double>(c.n(), c.rng);
    const auto hop = random_s_commuting_symmetric<double>(c.n(), c.rng);
    const auto u = make_flow(hop, c.rng.uniform(0.0, 10.0), c.h());
    const auto f = PolynomialVariabled::quadratic(a);
    const double pulled = classical_average_exact(PolynomialVariabled::quadratic(heisenberg_lift(a, u)), rho);
    const double pushed = classical_average_exact(f, vonneumann_lift(rho, u));
    residual = std::max(residual, rel_diff(pulled, pushed));
  }
  return at_most("lifting_duality", residual, 1e-10);
}

// Derivative checks run in the unscaled regime h = 1 with O(1) operators, so a
// central difference with step 1e-5 resolves them to about 1e-10.
CheckResult liouville_generator(Context& c) {
  double residual = 0;
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const auto hop = random_symmetric<double>(c.n(), c.rng);
    const auto f = PolynomialVariabled::quadratic(random_s_commuting_symmetric<double>(c.n(), c.rng)) +
                   PolynomialVariabled::product({random_s_commuting_symmetric<double>(c.n(), c.rng),
                                                 random_s_commuting_symmetric<double>(c.n(), c.rng)});
    const auto w = random_phase_vector<double>(c.n(), c.rng);
    const double fd = (f(evolve_point(make_flow(hop, kFdStep), w)) - f(evolve_point(make_flow(hop, -kFdStep), w))) /
                      (2 * kFdStep);
    // {f, H}(w) with H(w) = 1/2 (H w, w), i.e. (grad f, J H w).
    const double bracket = symplectic_form(f.gradient(w), hop * w);
    residual = std::max(residual, std::abs(fd - bracket) / std::max(1.0, std::abs(bracket)));
  }
  return at_most("liouville_generator", residual, 1e-6);
}

CheckResult heisenberg_equation(Context& c) {
  double residual = 0;
  const Mat j = symplectic_matrix<double>(c.n());
  const std::complex<double> i(0, 1);
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const bool invariant = k % 2 == 0;
    const auto hop = invariant ? random_s_commuting_symmetric<double>(c.n(), c.rng)
                               : random_symmetric<double>(c.n(), c.rng);
    const auto a = invariant ? random_s_commuting_symmetric<double>(c.n(), c.rng)
                             : random_symmetric<double>(c.n(), c.rng);
    const Mat fd = (heisenberg_lift(a, make_flow(hop, kFdStep)).matrix() -
                    heisenberg_lift(a, make_flow(hop, -kFdStep)).matrix()) /
                   (2 * kFdStep);
    const Mat exact = a.matrix() * j * hop.matrix() - hop.matrix() * j * a.matrix();
    residual = std::max(residual, max_abs_entry(Mat(fd - exact)) / std::max(1.0, max_abs_entry(exact)));
    if (invariant) {
      const CMat mh = to_complex_operator(hop), ma = to_complex_operator(a);
      const CMat complex_rate = i * (mh * ma - ma * mh);
      const CMat fd_c = to_complex_operator(BlockOperatord(fd), 1e-6);
      residual = std::max(residual, max_abs_entry(CMat(fd_c - complex_rate)) /
                                        std::max(1.0, max_abs_entry(complex_rate)));
    }
  }
  return at_most("heisenberg_equation", residual, 1e-6);
}

CheckResult vonneumann_equation(Context& c) {
  double residual = 0;
  const Mat j = symplectic_matrix<double>(c.n());
  const std::complex<double> i(0, 1);
  for (std::size_t k = 0; k < c.opts.trials; ++k) {
    const GaussianStated rho(random_psd_covariance<double>(c.n(), c.rng));
    const auto hop = random_symmetric<double>(c.n(), c.rng);
    const auto hs = random_s_commuting_symmetric<double>(c.n(), c.rng);
    // Real form for a generic generator: dB/dt = JH B - B H J.
    const Mat fd = (vonneumann_lift(rho, make_flow(hop, kFdStep)).covariance() -
                    vonneumann_lift(rho, make_flow(hop, -kFdStep)).covariance()) /
                   (2 * kFdStep);
    const Mat exact = j * hop.matrix() * rho.covariance() - rho.covariance() * hop.matrix() * j;
    residual = std::max(residual, max_abs_entry(Mat(fd - exact)) / std::max(1.0, max_abs_entry(exact)));
    // Complex form for an s-commuting generator: dBc/dt = i [Bc, M].
    const CMat fd_c = (complex_covariance(vonneumann_lift(rho, make_flow(hs, kFdStep))).matrix() -
                       complex_covariance(vonneumann_lift(rho, make_flow(hs, -kFdStep))).matrix()) /
                      (2 * kFdStep);
    const CMat bc = complex_covariance(rho).matrix(), mh = to_complex_operator(hs);
    const CMat rate = i * (bc * mh - mh * bc);
    residual = std::max(residual, max_abs_entry(CMat(fd_c - rate)) / std::max(1.0, max_abs_entry(rate)));
  }
  return at_most("vonneumann_equation", residual, 1e-6);
}

CheckResult configured_state(Context& c) {
  const GaussianStated& rho = *c.opts.state;
  const bool observed = is_symplectically_invariant(rho);
  const bool expected = !c.opts.negative_control;
  const double residual = s_commutator_residual(BlockOperatord(rho.covariance()));
  CheckResult r{"state_symplectic_invariance", observed == expected, residual,
                resolve_tolerance(rho.covariance(), std::optional<double>{}),
                std::string("observed ") + (observed ? "invariant" : "not invariant") + ", expected " +
                    (expected ? "invariant" : "not invariant")};
  return r;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  using CheckFn = CheckResult (*)(Context&);
  const CheckFn checks[] = {
      block_form,          algebra_closure,         symplectic_symmetry,         complex_linearity,
      hermitian_representation, flow_s_commuting,  complexified_dynamics,       norm_preservation,
      norm_change_witness, invariant_measure_covariance, complex_mean_vanishes, complex_covariance_doubling,
      covariance_block_relation, trace_formula,     covariance_round_trip,       pure_state_spectrum,
      average_equality,    quantization_bijection,  quantization_linearity,      quantization_degeneracy,
      second_derivative_s_commuting, lifting_duality, liouville_generator,      heisenberg_equation,
      vonneumann_equation,
  };
  std::vector<CheckResult> results;
  std::uint64_t index = 0;
  for (CheckFn check : checks) {
    Context ctx{opts, RandomStream(opts.seed, 1000 + index++)};
    results.push_back(check(ctx));
  }
  if (opts.state) {
    Context ctx{opts, RandomStream(opts.seed, 1000 + index)};
    results.push_back(configured_state(ctx));
  }
  return results;
}

}  // namespace pcsft
