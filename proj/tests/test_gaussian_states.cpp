#include <doctest.h>

#include "oracles.hpp"
#include "pcsft/random_ops.hpp"

using namespace pcsft;
using oracle::CMat;
using oracle::Mat;

TEST_SUITE("gaussian-states") {

TEST_CASE("construction validates the covariance") {
  CHECK_THROWS_AS(GaussianStated(Mat::Identity(3, 3)), std::invalid_argument);
  Mat asym = Mat::Identity(2, 2);
  asym(0, 1) = 0.5;
  CHECK_THROWS_AS(GaussianStated{asym}, std::invalid_argument);
  Mat indefinite = Mat::Identity(2, 2);
  indefinite(1, 1) = -0.1;
  CHECK_THROWS_AS(GaussianStated{indefinite}, std::domain_error);
  Mat nan = Mat::Identity(2, 2);
  nan(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS(GaussianStated{nan});
  // Singular covariances are allowed.
  CHECK_NOTHROW(GaussianStated(Mat::Zero(4, 4)));
}

TEST_CASE("dispersion") {
  CHECK(dispersion(GaussianStated(0.01 * Mat::Identity(6, 6))) == doctest::Approx(0.06));
  RandomStream rng(41);
  const double h = 0.02;
  CHECK(dispersion(pure_state_covariance(random_unit_vector<double>(4, rng), h)) == doctest::Approx(2 * h));
}

TEST_CASE("degenerate state samples zero") {
  const GaussianStated rho(Mat::Zero(4, 4));
  RandomStream rng(42);
  for (int k = 0; k < 10; ++k) CHECK(sample(rho, rng).squared_norm() == 0);
}

TEST_CASE("complex covariance") {
  const auto bc = complex_covariance(GaussianStated(Mat::Identity(6, 6)));
  CHECK(max_abs_entry(CMat(bc.matrix() - 2.0 * CMat::Identity(3, 3))) == 0);

  RandomStream rng(43);
  for (int k = 0; k < 20; ++k) {
    // Invariant states: D = 2 B11, S = 2 B12.
    const auto rho = random_invariant_state<double>(3, 0.1, rng);
    const CMat m = complex_covariance(rho).matrix();
    CHECK(max_abs_entry(Mat(m.real() - 2.0 * rho.b11())) <= 1e-15);
    CHECK(max_abs_entry(Mat(-m.imag() - 2.0 * rho.b12())) <= 1e-15);
    CHECK(complex_covariance(rho).trace() == doctest::Approx(dispersion(rho)).epsilon(1e-13));

    // Bilinear identity for arbitrary states: <Bc y1, y2> = a1^T B conj(a2), a = y + i J y.
    const GaussianStated any(random_psd_covariance<double>(3, rng));
    const auto y1 = random_phase_vector<double>(3, rng), y2 = random_phase_vector<double>(3, rng);
    const Mat j = oracle::j_matrix(3);
    const ComplexVector<double> a1 =
        y1.coordinates().cast<std::complex<double>>() + std::complex<double>(0, 1) * (j * y1.coordinates()).cast<std::complex<double>>();
    const ComplexVector<double> a2 =
        y2.coordinates().cast<std::complex<double>>() + std::complex<double>(0, 1) * (j * y2.coordinates()).cast<std::complex<double>>();
    const std::complex<double> lhs = (complex_covariance(any).matrix() * complexify(y1)).dot(complexify(y2));
    const std::complex<double> rhs = (a1.transpose() * any.covariance().cast<std::complex<double>>() * a2.conjugate())(0, 0);
    // Eigen's dot conjugates its first argument; <u, v> here is sum u conj(v).
    CHECK(std::abs(std::conj(lhs) - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("invariant states satisfy Bc(y, y) = 2 (B y, y)") {
  RandomStream rng(44);
  for (int k = 0; k < 20; ++k) {
    const auto rho = random_invariant_state<double>(3, 0.05, rng);
    const auto y = random_phase_vector<double>(3, rng);
    const ComplexVector<double> z = complexify(y);
    const double lhs = (z.adjoint() * complex_covariance(rho).matrix() * z)(0, 0).real();
    const double rhs = 2.0 * y.coordinates().dot(rho.covariance() * y.coordinates());
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("symplectic invariance") {
  CHECK(is_symplectically_invariant(GaussianStated(0.3 * Mat::Identity(4, 4))));
  Mat split = Mat::Identity(4, 4);
  split.bottomRightCorner(2, 2) *= 1.5;
  CHECK_FALSE(is_symplectically_invariant(GaussianStated(split)));
  const Mat j = oracle::j_matrix(2);
  CHECK(max_abs_entry(Mat(j * split * j.transpose() - split)) > 0.4);

  RandomStream rng(45);
  for (int k = 0; k < 20; ++k) {
    const ComplexCovarianced bc(random_hermitian_psd<double>(3, rng));
    CHECK(is_symplectically_invariant(from_complex_covariance(bc)));
  }
}

TEST_CASE("from_complex_covariance") {
  const double h = 0.03;
  const auto rho = from_complex_covariance(ComplexCovarianced(2 * h * CMat::Identity(3, 3)));
  CHECK(max_abs_entry(Mat(rho.covariance() - h * Mat::Identity(6, 6))) <= 1e-18);

  RandomStream rng(46);
  for (int k = 0; k < 20; ++k) {
    const CMat bc = random_hermitian_psd<double>(4, rng);
    CHECK(max_abs_entry(CMat(complex_covariance(from_complex_covariance(ComplexCovarianced(bc))).matrix() - bc)) == 0);

    const ComplexVector<double> psi = random_unit_vector<double>(4, rng);
    const auto from_bc = from_complex_covariance(ComplexCovarianced(2 * h * psi * psi.adjoint()));
    CHECK(max_abs_entry(Mat(from_bc.covariance() - pure_state_covariance(psi, h).covariance())) <= 1e-15);
  }
  CMat not_hermitian = CMat::Identity(2, 2);
  not_hermitian(0, 1) = 1.0;
  CHECK_THROWS_AS(ComplexCovarianced{not_hermitian}, std::invalid_argument);
  CHECK_THROWS_AS(ComplexCovarianced(-CMat::Identity(2, 2)), std::domain_error);
}

TEST_CASE("pure state covariance") {
  const double h = 0.01;
  RandomStream rng(47);
  for (int k = 0; k < 10; ++k) {
    const ComplexVector<double> psi = random_unit_vector<double>(4, rng);
    const auto rho = pure_state_covariance(psi, h);
    Eigen::SelfAdjointEigenSolver<Mat> eig(rho.covariance());
    const Vector<double> ev = eig.eigenvalues();
    for (Index i = 0; i < 6; ++i) CHECK(std::abs(ev(i)) <= 1e-15);
    CHECK(ev(6) == doctest::Approx(h).epsilon(1e-12));
    CHECK(ev(7) == doctest::Approx(h).epsilon(1e-12));

    const ComplexVector<double> rotated = std::polar(1.0, rng.uniform(0.0, 6.28)) * psi;
    CHECK(max_abs_entry(Mat(pure_state_covariance(rotated, h).covariance() - rho.covariance())) <= 1e-17);
    CHECK(is_symplectically_invariant(rho));
  }
  ComplexVector<double> one(1);
  one(0) = 1;
  CHECK(max_abs_entry(Mat(pure_state_covariance(one, h).covariance() - h * Mat::Identity(2, 2))) == 0);
  CHECK_THROWS_AS(pure_state_covariance(ComplexVector<double>(2 * one.replicate(2, 1)), h), std::invalid_argument);
  CHECK_THROWS_AS(pure_state_covariance(one, 0.0), std::invalid_argument);
}

TEST_CASE("trace formula for s-commuting observables") {
  RandomStream rng(48);
  for (int k = 0; k < 50; ++k) {
    const auto a = random_s_commuting_symmetric<double>(3, rng);
    for (const GaussianStated& rho : {random_invariant_state<double>(3, 0.1, rng),
                                     GaussianStated(random_psd_covariance<double>(3, rng))}) {
      const double real_trace = (rho.covariance() * a.matrix()).trace();
      const double complex_trace = (complex_covariance(rho).matrix() * to_complex_operator(a)).trace().real();
      CHECK(real_trace == doctest::Approx(complex_trace).epsilon(1e-10));
      // Exact Gaussian integral of (A w, w) via Isserlis.
      CHECK(2 * oracle::product_moment(rho.covariance(), {a.matrix()}) == doctest::Approx(real_trace).epsilon(1e-10));
    }
  }
}

TEST_CASE("sampler matches the covariance and has zero mean") {
  RandomStream rng(49);
  const auto rho = random_invariant_state<double>(2, 0.2, rng);
  const auto est = estimate_covariance(rho, 100000, 9);
  int outside = 0;
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j)
      if (std::abs(est.mean(i, j) - rho.covariance()(i, j)) > 4 * est.standard_error(i, j)) ++outside;
  CHECK(outside <= 1);

  auto moments = run_partitioned<double>(100000, 10, 2, 1, {}, [&](RandomStream& s) {
    const ComplexVector<double> z = complexify(sample(rho, s));
    RunningMoments<double>::Array out(2, 1);
    out(0, 0) = z(0).real();
    out(1, 0) = z(1).imag();
    return out;
  });
  const RunningMoments<double>::Array z = (moments.mean() / moments.standard_error()).abs();
  CHECK(z.maxCoeff() <= 4.0);
}

TEST_CASE("characteristic function is invariant under J for invariant states") {
  RandomStream rng(50);
  const Mat j = oracle::j_matrix(3);
  for (int k = 0; k < 20; ++k) {
    const auto rho = random_invariant_state<double>(3, 0.5, rng);
    const Vector<double> y = rng.normal_vector<double>(6);
    const Vector<double> jy = j.transpose() * y;
    CHECK(std::exp(-0.5 * jy.dot(rho.covariance() * jy)) ==
          doctest::Approx(std::exp(-0.5 * y.dot(rho.covariance() * y))).epsilon(1e-12));
  }
}

}
