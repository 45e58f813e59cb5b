#pragma once

// Matrix exponential by scaling and squaring with diagonal Pade approximants
// of degree 3, 5, 7, 9 or 13. Degree and scaling are chosen from the 1-norm so
// that the backward error of the approximant is bounded by the unit roundoff of
// IEEE double (Higham, SIAM J. Matrix Anal. Appl. 26(4), 2005).

#include <cmath>
#include <stdexcept>

#include "pcsft/types.hpp"

namespace pcsft {

template <typename Scalar>
struct ExponentialResult {
  Matrix<Scalar> value;
  int pade_degree = 0;
  int squarings = 0;
};

namespace detail {

template <typename Derived>
typename Derived::RealScalar one_norm(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Derived::RealScalar;
  return a.size() == 0 ? Real(0) : a.cwiseAbs().colwise().sum().maxCoeff();
}

// Coefficients of the degree-m diagonal Pade approximant, b[0..m].
constexpr double kPade3[] = {120.0, 60.0, 12.0, 1.0};
constexpr double kPade5[] = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr double kPade7[] = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                             25200.0,    1512.0,    56.0,      1.0};
constexpr double kPade9[] = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
                             2162160.0,     110880.0,     3960.0,       90.0,        1.0};
constexpr double kPade13[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                              1187353796428800.0,  129060195264000.0,   10559470521600.0,
                              670442572800.0,      33522128640.0,       1323241920.0,
                              40840800.0,          960960.0,            16380.0,
                              182.0,               1.0};

// Largest 1-norm for which degree m needs no scaling.
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

// Low-degree approximants: U = A * sum_k b[2k+1] A^{2k}, V = sum_k b[2k] A^{2k}.
template <typename Scalar, std::size_t N>
void pade_low(const Matrix<Scalar>& a, const double (&b)[N], Matrix<Scalar>& u, Matrix<Scalar>& v) {
  const Index dim = a.rows();
  const Matrix<Scalar> ident = Matrix<Scalar>::Identity(dim, dim);
  const Matrix<Scalar> a2 = a * a;
  Matrix<Scalar> power = ident;
  Matrix<Scalar> odd = Matrix<Scalar>::Zero(dim, dim);
  v = Matrix<Scalar>::Zero(dim, dim);
  for (std::size_t k = 0; 2 * k + 1 < N; ++k) {
    v += Scalar(b[2 * k]) * power;
    odd += Scalar(b[2 * k + 1]) * power;
    power = power * a2;
  }
  u.noalias() = a * odd;
}

template <typename Scalar>
void pade13(const Matrix<Scalar>& a, Matrix<Scalar>& u, Matrix<Scalar>& v) {
  const auto& b = kPade13;
  const Index dim = a.rows();
  const Matrix<Scalar> ident = Matrix<Scalar>::Identity(dim, dim);
  const Matrix<Scalar> a2 = a * a;
  const Matrix<Scalar> a4 = a2 * a2;
  const Matrix<Scalar> a6 = a4 * a2;
  const Matrix<Scalar> inner_u = Scalar(b[13]) * a6 + Scalar(b[11]) * a4 + Scalar(b[9]) * a2;
  const Matrix<Scalar> tmp =
      a6 * inner_u + Scalar(b[7]) * a6 + Scalar(b[5]) * a4 + Scalar(b[3]) * a2 + Scalar(b[1]) * ident;
  u.noalias() = a * tmp;
  const Matrix<Scalar> inner_v = Scalar(b[12]) * a6 + Scalar(b[10]) * a4 + Scalar(b[8]) * a2;
  v = a6 * inner_v + Scalar(b[6]) * a6 + Scalar(b[4]) * a4 + Scalar(b[2]) * a2 + Scalar(b[0]) * ident;
}

}  // namespace detail

template <typename Derived>
ExponentialResult<typename Derived::Scalar> matrix_exponential_detailed(
    const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Derived::RealScalar;
  if (input.rows() != input.cols()) throw std::invalid_argument("matrix_exponential: matrix must be square");

  ExponentialResult<Scalar> result;
  Matrix<Scalar> a = input;
  if (!a.allFinite()) throw std::domain_error("matrix_exponential: non-finite input");
  const double norm = static_cast<double>(detail::one_norm(a));

  Matrix<Scalar> u, v;
  if (norm <= detail::kTheta3) {
    detail::pade_low(a, detail::kPade3, u, v);
    result.pade_degree = 3;
  } else if (norm <= detail::kTheta5) {
    detail::pade_low(a, detail::kPade5, u, v);
    result.pade_degree = 5;
  } else if (norm <= detail::kTheta7) {
    detail::pade_low(a, detail::kPade7, u, v);
    result.pade_degree = 7;
  } else if (norm <= detail::kTheta9) {
    detail::pade_low(a, detail::kPade9, u, v);
    result.pade_degree = 9;
  } else {
    const int s = std::max(0, static_cast<int>(std::ceil(std::log2(norm / detail::kTheta13))));
    a *= Scalar(std::ldexp(Real(1), -s));
    detail::pade13(a, u, v);
    result.pade_degree = 13;
    result.squarings = s;
  }

  // r = (V - U)^{-1} (V + U)
  Matrix<Scalar> r = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < result.squarings; ++k) r = r * r;
  result.value = std::move(r);
  return result;
}

template <typename Derived>
Matrix<typename Derived::Scalar> matrix_exponential(const Eigen::MatrixBase<Derived>& a) {
  return matrix_exponential_detailed(a).value;
}

}  // namespace pcsft
