#include "pcsft/experiments.hpp"

#include <cmath>
#include <sstream>

#include "pcsft/correspondence.hpp"
#include "pcsft/dynamics.hpp"
#include "pcsft/verify.hpp"

namespace pcsft::cli {
namespace {

using io::json;

constexpr std::uint64_t kPointStream = 104;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::string render(OutputFormat format) const {
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.size(); ++i)
        if (!std::isfinite(row[i])) throw io::NonFiniteOutput("non-finite value in column " + header[i]);
    if (format == OutputFormat::Json) return to_json().dump(2) + "\n";
    std::ostringstream out;
    io::CsvWriter csv(out, header);
    for (const auto& row : rows) csv.row(row);
    return out.str();
  }

  json to_json() const {
    json out = json::array();
    for (const auto& row : rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < row.size(); ++i) obj[header[i]] = row[i];
      out.push_back(std::move(obj));
    }
    return out;
  }
};

DensityOperatord require_prequantum_state(const ExperimentConfig& cfg) {
  try {
    return quantize_state(cfg.state, cfg.h);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config error at state: ") + e.what());
  }
}

std::string index_suffix(Index i, Index j) { return std::to_string(i + 1) + "_" + std::to_string(j + 1); }

}  // namespace

CommandOutput cmd_verify(const ExperimentConfig& cfg, OutputFormat format) {
  VerifyOptions opts;
  opts.n = cfg.n;
  opts.h = cfg.h;
  opts.seed = cfg.seed;
  opts.trials = cfg.trials;
  opts.samples = cfg.samples;
  opts.mc = cfg.mc;
  opts.state = cfg.state;
  opts.negative_control = cfg.negative_control;
  const auto results = run_verification(opts);

  CommandOutput out;
  for (const auto& r : results) {
    if (!std::isfinite(r.max_residual)) throw io::NonFiniteOutput("non-finite residual in check " + r.check);
    out.passed = out.passed && r.passed;
  }
  if (format == OutputFormat::Json) {
    json checks = json::array();
    for (const auto& r : results) {
      json c{{"check", r.check},
             {"status", r.passed ? "pass" : "fail"},
             {"max_residual", r.max_residual},
             {"threshold", r.threshold}};
      if (!r.detail.empty()) c["detail"] = r.detail;
      checks.push_back(std::move(c));
    }
    json report{{"n", cfg.n}, {"h", cfg.h}, {"seed", cfg.seed}, {"checks", std::move(checks)}, {"passed", out.passed}};
    out.body = report.dump(2) + "\n";
  } else {
    std::ostringstream csv;
    csv << "check,status,max_residual,threshold\n";
    for (const auto& r : results) {
      csv << r.check << ',' << (r.passed ? "pass" : "fail") << ',' << io::format_double(r.max_residual) << ','
          << io::format_double(r.threshold) << '\n';
    }
    out.body = csv.str();
  }
  return out;
}

CommandOutput cmd_correspondence(const ExperimentConfig& cfg, OutputFormat format) {
  if (cfg.variable.max_degree() > 3) {
    throw ConfigError("config error at variable: exact averages support at most three quadratic factors per term");
  }
  const DensityOperatord d = require_prequantum_state(cfg);
  const double exact = classical_average_exact(cfg.variable, cfg.state);
  const auto mc = classical_average_mc(cfg.variable, cfg.state, cfg.samples, cfg.seed, cfg.mc);
  const double quantum = quantum_average(d, quantize_variable(cfg.variable, cfg.h));
  Table t{{"classical_exact", "classical_mc", "classical_mc_stderr", "quantum"},
          {{exact, mc.estimate, mc.standard_error, quantum}}};
  return {t.render(format), std::nullopt, true};
}

CommandOutput cmd_scaling(const ExperimentConfig& cfg, OutputFormat format) {
  if (cfg.h_grid.size() < 3) throw ConfigError("config error at h_grid: need at least three points");
  for (std::size_t i = 1; i < cfg.h_grid.size(); ++i) {
    if (!(cfg.h_grid[i] < cfg.h_grid[i - 1])) throw ConfigError("config error at h_grid: values must be strictly descending");
  }
  if (cfg.variable.max_degree() > 3) {
    throw ConfigError("config error at variable: exact averages support at most three quadratic factors per term");
  }
  const DensityOperatord d0 = require_prequantum_state(cfg);
  const ScalingStudy study = h_scaling_study(cfg.variable, d0, cfg.h_grid);

  Table t{{"h", "classical", "quantum", "abs_error"}, {}};
  for (const auto& r : study.rows) t.rows.push_back({r.h, r.classical, r.quantum, r.abs_error});
  json summary{{"slope", nullptr}, {"r2", nullptr}, {"exact", study.exact}};
  if (study.fit) {
    summary["slope"] = study.fit->slope;
    summary["r2"] = study.fit->r2;
  }
  CommandOutput out;
  if (format == OutputFormat::Json) {
    t.render(format);
    out.body = json{{"rows", t.to_json()}, {"summary", summary}}.dump(2) + "\n";
  } else {
    out.body = t.render(format);
    out.summary = summary.dump() + "\n";
  }
  return out;
}

CommandOutput cmd_dynamics(const ExperimentConfig& cfg, OutputFormat format) {
  const Index n = cfg.n;
  PhaseVectord point;
  if (cfg.point) {
    point = *cfg.point;
  } else {
    RandomStream rng(cfg.seed, kPointStream);
    point = sample(cfg.state, rng);
  }
  const ComplexMatrix<double> observable = quantize_variable(cfg.variable, cfg.h).matrix();

  Table t;
  t.header.push_back("t");
  for (Index i = 0; i < n; ++i) t.header.push_back("q_" + std::to_string(i + 1));
  for (Index i = 0; i < n; ++i) t.header.push_back("p_" + std::to_string(i + 1));
  t.header.push_back("dispersion");
  t.header.push_back("observable_average");

  for (const double time : cfg.times) {
    const auto flow = make_flow(cfg.generator, time, cfg.h);
    const auto wt = evolve_point(flow, point);
    const auto rho_t = vonneumann_lift(cfg.state, flow);
    // Tr(T(rho_t) M) with T(rho_t) = Bc_t / 2h, defined for any lifted state.
    const double average =
        (complex_covariance(rho_t).matrix() * observable).trace().real() / (2.0 * cfg.h);
    std::vector<double> row{time};
    for (Index i = 0; i < 2 * n; ++i) row.push_back(wt.coordinates()(i));
    row.push_back(dispersion(rho_t));
    row.push_back(average);
    t.rows.push_back(std::move(row));
  }
  return {t.render(format), std::nullopt, true};
}

CommandOutput cmd_ensemble(const ExperimentConfig& cfg, OutputFormat format) {
  if (!is_s_commuting(cfg.generator)) {
    throw ConfigError("config error at generator: ensemble evolution needs an s-commuting generator");
  }
  const Index n = cfg.n;
  const ComplexMatrix<double> m = to_complex_operator(cfg.generator);

  Table t;
  t.header.push_back("t");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      t.header.push_back("re_" + index_suffix(i, j));
      t.header.push_back("im_" + index_suffix(i, j));
    }
  for (const char* col : {"dispersion_exact", "dispersion_empirical", "max_abs_residual", "max_residual_in_se"})
    t.header.push_back(col);

  for (const double time : cfg.times) {
    const auto est = ensemble_evolve(cfg.state, m, time, cfg.h, cfg.samples, cfg.seed, cfg.mc);
    const ComplexMatrix<double> exact =
        complex_covariance(vonneumann_lift(cfg.state, make_flow(cfg.generator, time, cfg.h))).matrix();
    const ComplexMatrix<double>& emp = est.covariance.matrix();
    std::vector<double> row{time};
    double max_abs = 0, max_z = 0;
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        row.push_back(emp(i, j).real());
        row.push_back(emp(i, j).imag());
        const double dre = std::abs(emp(i, j).real() - exact(i, j).real());
        const double dim = std::abs(emp(i, j).imag() - exact(i, j).imag());
        max_abs = std::max({max_abs, dre, dim});
        if (est.real_standard_error(i, j) > 0) max_z = std::max(max_z, dre / est.real_standard_error(i, j));
        if (est.imag_standard_error(i, j) > 0) max_z = std::max(max_z, dim / est.imag_standard_error(i, j));
      }
    row.push_back(exact.trace().real());
    row.push_back(emp.trace().real());
    row.push_back(max_abs);
    row.push_back(max_z);
    t.rows.push_back(std::move(row));
  }
  return {t.render(format), std::nullopt, true};
}

}  // namespace pcsft::cli
