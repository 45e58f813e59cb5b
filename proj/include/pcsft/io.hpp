#pragma once

// JSON and CSV surfaces for binary64 values.
//
//   vector    {"q": [...], "p": [...]}
//   operator  {"n": n, "blocks": {"A11": [[...]], "A12": ..., "A21": ..., "A22": ...}}
//   state     {"n": n, "B": [[...]]}
//           | {"Bc": {"re": [[...]], "im": [[...]]}}
//           | {"pure": {"psi_re": [...], "psi_im": [...], "h": h}}
//   variable  {"terms": [{"coefficient": c, "factors": [operator, ...]}, ...]}
//
// Matrices are row-major nested arrays. Doubles are written in shortest
// round-trip form, so parse(dump(x)) == x bit for bit.

#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pcsft/correspondence.hpp"
#include "pcsft/gaussian_state.hpp"
#include "pcsft/polynomial_variable.hpp"

namespace pcsft::io {

using json = nlohmann::json;

/// Malformed document; `field()` is a dotted path to the offending entry.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string field, const std::string& message)
      : std::runtime_error((field.empty() ? std::string("<root>") : field) + ": " + message),
        field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Raised when a NaN or infinity would be written to an output.
class NonFiniteOutput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join_path(const std::string& base, const std::string& key);

json matrix_to_json(const Matrix<double>& m);
Matrix<double> matrix_from_json(const json& j, const std::string& path);
json vector_to_json(const Vector<double>& v);
Vector<double> vector_from_json(const json& j, const std::string& path);
double number_from_json(const json& j, const std::string& path);

json to_json(const PhaseVectord& w);
PhaseVectord phase_vector_from_json(const json& j, const std::string& path = "");

json to_json(const BlockOperatord& a);
BlockOperatord block_operator_from_json(const json& j, const std::string& path = "");

json to_json(const GaussianStated& rho);
json to_json(const ComplexCovarianced& bc);
/// Accepts any of the three state forms. The "pure" form carries its own h.
GaussianStated gaussian_state_from_json(const json& j, const std::string& path = "");

json to_json(const PolynomialVariabled& f);
PolynomialVariabled polynomial_variable_from_json(const json& j, const std::string& path = "");

/// 17 significant digits.
std::string format_double(double x);

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> header);
  void row(std::span<const double> values);
  std::size_t columns() const { return header_.size(); }

 private:
  std::ostream& out_;
  std::vector<std::string> header_;
};

}  // namespace pcsft::io
