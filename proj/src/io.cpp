#include "pcsft/io.hpp"

#include <cmath>
#include <cstdio>

namespace pcsft::io {

std::string join_path(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

double number_from_json(const json& j, const std::string& path) {
  if (!j.is_number()) throw FormatError(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw FormatError(path, "number is not finite");
  return x;
}

json matrix_to_json(const Matrix<double>& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<double> matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw FormatError(path, "expected an array of rows");
  const Index rows = static_cast<Index>(j.size());
  Index cols = 0;
  if (rows > 0) {
    if (!j[0].is_array()) throw FormatError(path + "[0]", "expected a row array");
    cols = static_cast<Index>(j[0].size());
  }
  Matrix<double> m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array()) throw FormatError(row_path, "expected a row array");
    if (static_cast<Index>(row.size()) != cols) {
      throw FormatError(row_path, "row has " + std::to_string(row.size()) + " entries, expected " +
                                      std::to_string(cols));
    }
    for (Index k = 0; k < cols; ++k) {
      m(i, k) = number_from_json(row[static_cast<std::size_t>(k)],
                                 row_path + "[" + std::to_string(k) + "]");
    }
  }
  return m;
}

json vector_to_json(const Vector<double>& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Vector<double> vector_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw FormatError(path, "expected an array");
  Vector<double> v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Index>(i)) = number_from_json(j[i], path + "[" + std::to_string(i) + "]");
  }
  return v;
}

namespace {

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw FormatError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(join_path(path, key), "missing field");
  return *it;
}

template <typename Fn>
auto wrap_domain_errors(const std::string& path, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(path, e.what());
  }
}

}  // namespace

json to_json(const PhaseVectord& w) {
  return json{{"q", vector_to_json(w.q())}, {"p", vector_to_json(w.p())}};
}

PhaseVectord phase_vector_from_json(const json& j, const std::string& path) {
  const Vector<double> q = vector_from_json(require(j, "q", path), join_path(path, "q"));
  const Vector<double> p = vector_from_json(require(j, "p", path), join_path(path, "p"));
  if (q.size() != p.size()) throw FormatError(path, "q and p have different lengths");
  return PhaseVectord(q, p);
}

json to_json(const BlockOperatord& a) {
  return json{{"n", a.dim()},
              {"blocks",
               {{"A11", matrix_to_json(a.a11())},
                {"A12", matrix_to_json(a.a12())},
                {"A21", matrix_to_json(a.a21())},
                {"A22", matrix_to_json(a.a22())}}}};
}

BlockOperatord block_operator_from_json(const json& j, const std::string& path) {
  const json& nj = require(j, "n", path);
  if (!nj.is_number_integer() || nj.get<long long>() < 1) {
    throw FormatError(join_path(path, "n"), "expected a positive integer");
  }
  const Index n = nj.get<Index>();
  const std::string bpath = join_path(path, "blocks");
  const json& blocks = require(j, "blocks", path);
  Matrix<double> parts[4];
  const char* names[4] = {"A11", "A12", "A21", "A22"};
  for (int k = 0; k < 4; ++k) {
    const std::string p = join_path(bpath, names[k]);
    parts[k] = matrix_from_json(require(blocks, names[k], bpath), p);
    if (parts[k].rows() != n || parts[k].cols() != n) {
      throw FormatError(p, "block must be " + std::to_string(n) + "x" + std::to_string(n));
    }
  }
  return BlockOperatord(parts[0], parts[1], parts[2], parts[3]);
}

json to_json(const GaussianStated& rho) {
  return json{{"n", rho.dim()}, {"B", matrix_to_json(rho.covariance())}};
}

json to_json(const ComplexCovarianced& bc) {
  return json{{"n", bc.dim()},
              {"Bc", {{"re", matrix_to_json(bc.matrix().real())}, {"im", matrix_to_json(bc.matrix().imag())}}}};
}

GaussianStated gaussian_state_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw FormatError(path, "expected a state object");
  std::optional<Index> n;
  if (j.contains("n")) {
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) {
      throw FormatError(join_path(path, "n"), "expected a positive integer");
    }
    n = j["n"].get<Index>();
  }
  auto check_n = [&](Index got, const std::string& p) {
    if (n && *n != got) throw FormatError(p, "dimension " + std::to_string(got) + " does not match n");
  };

  if (j.contains("B")) {
    const std::string p = join_path(path, "B");
    Matrix<double> b = matrix_from_json(j["B"], p);
    if (b.rows() != b.cols() || b.rows() % 2 != 0) throw FormatError(p, "B must be square with even size");
    check_n(b.rows() / 2, p);
    return wrap_domain_errors(p, [&] { return GaussianStated(std::move(b)); });
  }
  if (j.contains("Bc")) {
    const std::string p = join_path(path, "Bc");
    const Matrix<double> re = matrix_from_json(require(j["Bc"], "re", p), join_path(p, "re"));
    const Matrix<double> im = matrix_from_json(require(j["Bc"], "im", p), join_path(p, "im"));
    if (re.rows() != re.cols() || im.rows() != re.rows() || im.cols() != re.cols()) {
      throw FormatError(p, "re and im must be square with equal size");
    }
    check_n(re.rows(), p);
    ComplexMatrix<double> bc(re.rows(), re.cols());
    bc.real() = re;
    bc.imag() = im;
    return wrap_domain_errors(p, [&] { return from_complex_covariance(ComplexCovarianced(std::move(bc))); });
  }
  if (j.contains("pure")) {
    const std::string p = join_path(path, "pure");
    const json& pj = j["pure"];
    const Vector<double> re = vector_from_json(require(pj, "psi_re", p), join_path(p, "psi_re"));
    const Vector<double> im = vector_from_json(require(pj, "psi_im", p), join_path(p, "psi_im"));
    if (re.size() != im.size() || re.size() == 0) throw FormatError(p, "psi_re and psi_im must have equal nonzero length");
    check_n(re.size(), p);
    const double h = number_from_json(require(pj, "h", p), join_path(p, "h"));
    ComplexVector<double> psi(re.size());
    psi.real() = re;
    psi.imag() = im;
    return wrap_domain_errors(p, [&] { return pure_state_covariance(psi, h); });
  }
  throw FormatError(path, "state must contain one of \"B\", \"Bc\" or \"pure\"");
}

json to_json(const PolynomialVariabled& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) {
    json factors = json::array();
    for (const auto& a : t.factors) factors.push_back(to_json(a));
    terms.push_back(json{{"coefficient", t.coefficient}, {"factors", std::move(factors)}});
  }
  return json{{"n", f.dim()}, {"terms", std::move(terms)}};
}

PolynomialVariabled polynomial_variable_from_json(const json& j, const std::string& path) {
  const json& nj = require(j, "n", path);
  if (!nj.is_number_integer() || nj.get<long long>() < 1) {
    throw FormatError(join_path(path, "n"), "expected a positive integer");
  }
  const Index n = nj.get<Index>();
  const std::string tpath = join_path(path, "terms");
  const json& tj = require(j, "terms", path);
  if (!tj.is_array()) throw FormatError(tpath, "expected an array");
  std::vector<PolynomialVariabled::Term> terms;
  for (std::size_t k = 0; k < tj.size(); ++k) {
    const std::string p = tpath + "[" + std::to_string(k) + "]";
    PolynomialVariabled::Term term;
    term.coefficient = number_from_json(require(tj[k], "coefficient", p), join_path(p, "coefficient"));
    const json& fj = require(tj[k], "factors", p);
    if (!fj.is_array()) throw FormatError(join_path(p, "factors"), "expected an array");
    for (std::size_t i = 0; i < fj.size(); ++i) {
      term.factors.push_back(
          block_operator_from_json(fj[i], join_path(p, "factors") + "[" + std::to_string(i) + "]"));
    }
    terms.push_back(std::move(term));
  }
  return wrap_domain_errors(path, [&] { return PolynomialVariabled(n, std::move(terms)); });
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> header)
    : out_(out), header_(std::move(header)) {
  for (std::size_t i = 0; i < header_.size(); ++i) out_ << (i ? "," : "") << header_[i];
  out_ << '\n';
}

void CsvWriter::row(std::span<const double> values) {
  if (values.size() != header_.size()) {
    throw std::invalid_argument("CsvWriter: row has " + std::to_string(values.size()) + " cells, header has " +
                                std::to_string(header_.size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw NonFiniteOutput("non-finite value in column " + header_[i]);
    }
  }
  for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format_double(values[i]);
  out_ << '\n';
}

}  // namespace pcsft::io
