#include <doctest.h>

#include "oracles.hpp"
#include "pcsft/random_ops.hpp"

using namespace pcsft;
using oracle::CMat;
using oracle::Mat;

TEST_SUITE("expm") {

TEST_CASE("zero matrix gives identity") {
  const auto r = matrix_exponential_detailed(Mat::Zero(5, 5));
  CHECK(max_abs_entry(Mat(r.value - Mat::Identity(5, 5))) == 0);
  CHECK(r.squarings == 0);
}

TEST_CASE("diagonal and nilpotent closed forms") {
  Mat d = Mat::Zero(3, 3);
  d.diagonal() << -2.0, 0.5, 3.0;
  const Mat e = matrix_exponential(d);
  for (Index i = 0; i < 3; ++i) CHECK(e(i, i) == doctest::Approx(std::exp(d(i, i))).epsilon(1e-14));

  Mat n = Mat::Zero(3, 3);
  n(0, 1) = 1;
  n(1, 2) = 1;
  Mat expected = Mat::Identity(3, 3) + n;
  expected(0, 2) = 0.5;
  CHECK(max_abs_entry(Mat(matrix_exponential(n) - expected)) <= 1e-15);
}

TEST_CASE("rotation generator") {
  for (const double t : {0.1, 1.0, 10.0, 250.0}) {
    Mat k(2, 2);
    k << 0, t, -t, 0;
    const Mat e = matrix_exponential(k);
    CHECK(e(0, 0) == doctest::Approx(std::cos(t)).epsilon(1e-12));
    CHECK(e(0, 1) == doctest::Approx(std::sin(t)).epsilon(1e-12));
  }
}

TEST_CASE("agrees with the reference implementation across norms") {
  RandomStream rng(11);
  for (const double scale : {1e-4, 0.1, 1.0, 5.0, 40.0}) {
    for (int k = 0; k < 5; ++k) {
      const Mat a = scale * random_matrix<double>(6, 6, rng) / 6.0;
      const Mat ours = matrix_exponential(a);
      const Mat ref = oracle::eigen_expm(a);
      CHECK(max_abs_entry(Mat(ours - ref)) <= 1e-11 * std::max(1.0, max_abs_entry(ref)));

      const CMat ca = CMat(a) * std::complex<double>(0.3, -1.0);
      const CMat cref = oracle::eigen_expm(ca);
      CHECK(max_abs_entry(CMat(matrix_exponential(ca) - cref)) <= 1e-11 * std::max(1.0, max_abs_entry(cref)));
    }
  }
}

TEST_CASE("exp(A) exp(-A) = I") {
  RandomStream rng(12);
  const Mat a = random_matrix<double>(5, 5, rng);
  CHECK(max_abs_entry(Mat(matrix_exponential(a) * matrix_exponential(Mat(-a)) - Mat::Identity(5, 5))) <= 1e-12);
}

TEST_CASE("non-finite input is rejected") {
  Mat a = Mat::Zero(2, 2);
  a(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(matrix_exponential(a), std::domain_error);
}

}
