#pragma once

#include <stdexcept>
#include <vector>

#include "pcsft/phase_space.hpp"

namespace pcsft {

/// f(w) = sum_k c_k prod_j 1/2 (A_kj w, w), each A_kj symmetric and
/// s-commuting. Every term carries at least one factor, so f(0) = 0 and
/// f(Jw) = f(w).
template <typename Scalar>
class PolynomialVariable {
 public:
  struct Term {
    Scalar coefficient;
    std::vector<BlockOperator<Scalar>> factors;
  };

  PolynomialVariable() = default;

  PolynomialVariable(Index n, std::vector<Term> terms, std::optional<Scalar> tol = {})
      : n_(n), terms_(std::move(terms)) {
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const Term& term = terms_[k];
      if (term.factors.empty()) {
        throw std::invalid_argument("PolynomialVariable: term " + std::to_string(k) + " has no factors");
      }
      for (const auto& a : term.factors) {
        if (a.dim() != n_) {
          throw std::invalid_argument("PolynomialVariable: term " + std::to_string(k) +
                                      " has a factor of dimension " + std::to_string(a.dim()));
        }
        if (!a.is_symmetric(tol)) {
          throw std::invalid_argument("PolynomialVariable: term " + std::to_string(k) +
                                      " has a non-symmetric factor");
        }
        if (!is_s_commuting(a, tol)) {
          throw std::invalid_argument("PolynomialVariable: term " + std::to_string(k) +
                                      " has a factor that does not commute with J");
        }
      }
    }
  }

  static PolynomialVariable zero(Index n) { return PolynomialVariable(n, {}); }

  static PolynomialVariable quadratic(const BlockOperator<Scalar>& a, Scalar coefficient = 1) {
    return PolynomialVariable(a.dim(), {Term{coefficient, {a}}});
  }

  static PolynomialVariable product(std::vector<BlockOperator<Scalar>> factors, Scalar coefficient = 1) {
    if (factors.empty()) throw std::invalid_argument("PolynomialVariable::product: no factors");
    const Index n = factors.front().dim();
    return PolynomialVariable(n, {Term{coefficient, std::move(factors)}});
  }

  Index dim() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.factors.size());
    return d;
  }

  Scalar operator()(const PhaseVector<Scalar>& w) const {
    check_dim(w);
    Scalar value = 0;
    for (const auto& t : terms_) {
      Scalar prod = t.coefficient;
      for (const auto& a : t.factors) prod *= quadratic_form_eval(a, w);
      value += prod;
    }
    return value;
  }

  /// Analytic gradient: grad 1/2(Aw, w) = Aw, product rule across factors.
  PhaseVector<Scalar> gradient(const PhaseVector<Scalar>& w) const {
    check_dim(w);
    Vector<Scalar> g = Vector<Scalar>::Zero(2 * n_);
    std::vector<Scalar> values;
    for (const auto& t : terms_) {
      values.clear();
      for (const auto& a : t.factors) values.push_back(quadratic_form_eval(a, w));
      for (std::size_t j = 0; j < t.factors.size(); ++j) {
        Scalar others = t.coefficient;
        for (std::size_t k = 0; k < values.size(); ++k)
          if (k != j) others *= values[k];
        g += others * (t.factors[j].matrix() * w.coordinates());
      }
    }
    return PhaseVector<Scalar>::from_coordinates(std::move(g));
  }

  /// f''(0): only single-factor terms contribute; products of two or more
  /// quadratic forms vanish to fourth order at the origin.
  BlockOperator<Scalar> second_derivative_at_zero() const {
    BlockOperator<Scalar> h = BlockOperator<Scalar>::zero(n_);
    for (const auto& t : terms_)
      if (t.factors.size() == 1) h = h + t.coefficient * t.factors.front();
    return h;
  }

  friend PolynomialVariable operator+(const PolynomialVariable& f, const PolynomialVariable& g) {
    if (f.n_ != g.n_) throw std::invalid_argument("PolynomialVariable: dimension mismatch");
    PolynomialVariable out = f;
    out.terms_.insert(out.terms_.end(), g.terms_.begin(), g.terms_.end());
    return out;
  }

  friend PolynomialVariable operator*(Scalar s, const PolynomialVariable& f) {
    PolynomialVariable out = f;
    for (auto& t : out.terms_) t.coefficient *= s;
    return out;
  }

 private:
  void check_dim(const PhaseVector<Scalar>& w) const {
    if (w.dim() != n_) throw std::invalid_argument("PolynomialVariable: dimension mismatch");
  }

  Index n_ = 0;
  std::vector<Term> terms_;
};

using PolynomialVariabled = PolynomialVariable<double>;

}  // namespace pcsft
