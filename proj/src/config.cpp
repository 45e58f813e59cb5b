#include "pcsft/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "pcsft/random_ops.hpp"

namespace pcsft::cli {
namespace {

using io::json;
using io::join_path;

// Stream ids for the seeded shortcuts.
constexpr std::uint64_t kGeneratorStream = 101;
constexpr std::uint64_t kVariableStream = 103;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ConfigError("config error at " + (field.empty() ? std::string("<root>") : field) + ": " + message);
}

[[noreturn]] void fail(const io::FormatError& e) { throw ConfigError(std::string("config error at ") + e.what()); }

double positive_number(const json& j, const std::string& path) {
  const double x = io::number_from_json(j, path);
  if (!(x > 0)) fail(path, "must be positive");
  return x;
}

std::uint64_t count_field(const json& j, const std::string& path, std::uint64_t min_value) {
  if (!j.is_number_integer() || j.get<long long>() < static_cast<long long>(min_value)) {
    fail(path, "expected an integer >= " + std::to_string(min_value));
  }
  return j.get<std::uint64_t>();
}

double optional_scale(const json& spec, const std::string& path) {
  if (!spec.is_object() || !spec.contains("scale")) return 1.0;
  return positive_number(spec["scale"], join_path(path, "scale"));
}

const std::string& single_key(const json& j, const std::string& path) {
  if (!j.is_object() || j.size() != 1) fail(path, "expected an object with exactly one key");
  return j.begin().key();
}

BlockOperatord scommuting_from_blocks(const json& spec, Index n, const std::string& path) {
  if (!spec.is_object() || !spec.contains("D") || !spec.contains("S")) fail(path, "needs \"D\" and \"S\"");
  const Matrix<double> d = io::matrix_from_json(spec["D"], join_path(path, "D"));
  const Matrix<double> s = io::matrix_from_json(spec["S"], join_path(path, "S"));
  if (d.rows() != n || d.cols() != n || s.rows() != n || s.cols() != n) {
    fail(path, "D and S must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  return BlockOperatord::s_commuting(d, s);
}

BlockOperatord operator_from_config(const json& j, Index n, const std::string& path) {
  try {
    auto op = io::block_operator_from_json(j, path);
    if (op.dim() != n) fail(path, "operator dimension " + std::to_string(op.dim()) + " does not match n");
    return op;
  } catch (const io::FormatError& e) {
    fail(e);
  }
}

BlockOperatord parse_generator(const json& j, Index n, std::uint64_t seed, std::string& kind,
                               const std::string& path) {
  kind = single_key(j, path);
  const json& spec = j.begin().value();
  const std::string p = join_path(path, kind);
  RandomStream rng(seed, kGeneratorStream);
  BlockOperatord op;
  if (kind == "harmonic") {
    const double k = spec.is_object() && spec.contains("k") ? io::number_from_json(spec["k"], join_path(p, "k")) : 1.0;
    op = k * BlockOperatord::identity(n);
  } else if (kind == "random_scommuting") {
    op = random_s_commuting_symmetric<double>(n, rng, optional_scale(spec, p));
  } else if (kind == "random_symmetric") {
    op = random_symmetric<double>(n, rng, optional_scale(spec, p));
  } else if (kind == "matrix") {
    op = operator_from_config(spec, n, p);
  } else if (kind == "scommuting") {
    op = scommuting_from_blocks(spec, n, p);
  } else {
    fail(path, "unknown generator kind \"" + kind + "\"");
  }
  if (!op.is_symmetric()) fail(p, "generator must be symmetric");
  return op;
}

GaussianStated parse_state(const json& j, Index n, double h, std::string& kind,
                           const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  if (j.contains("maximally_mixed")) {
    kind = "maximally_mixed";
    const ComplexMatrix<double> bc = ComplexMatrix<double>::Identity(n, n) * (2.0 * h / double(n));
    return from_complex_covariance(ComplexCovarianced(bc));
  }
  json state = j;
  if (j.contains("pure")) {
    kind = "pure";
    if (!j["pure"].is_object()) fail(join_path(path, "pure"), "expected an object");
    if (j["pure"].contains("h")) {
      const double given = io::number_from_json(j["pure"]["h"], join_path(path, "pure.h"));
      if (given != h) fail(join_path(path, "pure.h"), "does not match the configured h");
    } else {
      state["pure"]["h"] = h;
    }
  } else if (j.contains("Bc")) {
    kind = "complex_covariance";
  } else if (j.contains("B")) {
    kind = "real_covariance";
  } else {
    fail(path, "state must be one of maximally_mixed, pure, Bc, B");
  }
  try {
    GaussianStated rho = io::gaussian_state_from_json(state, path);
    if (rho.dim() != n) fail(path, "state dimension " + std::to_string(rho.dim()) + " does not match n");
    return rho;
  } catch (const io::FormatError& e) {
    fail(e);
  }
}

BlockOperatord parse_factor(const json& j, Index n, RandomStream& rng, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() == "identity") return BlockOperatord::identity(n);
    fail(path, "unknown factor shortcut \"" + j.get<std::string>() + "\"");
  }
  if (j.is_object() && j.contains("blocks")) return operator_from_config(j, n, path);
  const std::string& kind = single_key(j, path);
  const json& spec = j.begin().value();
  const std::string p = join_path(path, kind);
  if (kind == "harmonic") {
    const double k = spec.is_object() && spec.contains("k") ? io::number_from_json(spec["k"], join_path(p, "k")) : 1.0;
    return k * BlockOperatord::identity(n);
  }
  if (kind == "scommuting") return scommuting_from_blocks(spec, n, p);
  if (kind == "random_scommuting") return random_s_commuting_symmetric<double>(n, rng, optional_scale(spec, p));
  if (kind == "random_positive") return random_s_commuting_positive<double>(n, rng, optional_scale(spec, p));
  fail(path, "unknown factor kind \"" + kind + "\"");
}

PolynomialVariabled parse_variable(const json& j, Index n, std::uint64_t seed, const std::string& path) {
  if (!j.is_object() || !j.contains("terms")) fail(path, "expected {\"terms\": [...]}");
  const json& terms_json = j["terms"];
  const std::string tpath = join_path(path, "terms");
  if (!terms_json.is_array()) fail(tpath, "expected an array");
  RandomStream rng(seed, kVariableStream);
  std::vector<PolynomialVariabled::Term> terms;
  for (std::size_t k = 0; k < terms_json.size(); ++k) {
    const std::string p = tpath + "[" + std::to_string(k) + "]";
    const json& tj = terms_json[k];
    if (!tj.is_object()) fail(p, "expected an object");
    PolynomialVariabled::Term term;
    term.coefficient = tj.contains("coefficient") ? io::number_from_json(tj["coefficient"], join_path(p, "coefficient")) : 1.0;
    if (!tj.contains("factors") || !tj["factors"].is_array() || tj["factors"].empty()) {
      fail(join_path(p, "factors"), "expected a non-empty array");
    }
    for (std::size_t i = 0; i < tj["factors"].size(); ++i) {
      const std::string fp = join_path(p, "factors") + "[" + std::to_string(i) + "]";
      BlockOperatord a = parse_factor(tj["factors"][i], n, rng, fp);
      if (!a.is_symmetric()) fail(fp, "factor must be symmetric");
      if (!is_s_commuting(a)) fail(fp, "factor must commute with J");
      term.factors.push_back(std::move(a));
    }
    terms.push_back(std::move(term));
  }
  return PolynomialVariabled(n, std::move(terms));
}

std::vector<double> parse_times(const json& j, const std::string& path) {
  std::vector<double> times;
  if (j.is_array()) {
    if (j.empty()) fail(path, "expected at least one time");
    for (std::size_t i = 0; i < j.size(); ++i) times.push_back(io::number_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    return times;
  }
  if (!j.is_object()) fail(path, "expected an array or {start, stop, steps}");
  for (const char* key : {"start", "stop", "steps"})
    if (!j.contains(key)) fail(join_path(path, key), "missing field");
  const double start = io::number_from_json(j["start"], join_path(path, "start"));
  const double stop = io::number_from_json(j["stop"], join_path(path, "stop"));
  const std::uint64_t steps = count_field(j["steps"], join_path(path, "steps"), 1);
  for (std::uint64_t i = 0; i < steps; ++i) {
    times.push_back(steps == 1 ? start : start + (stop - start) * double(i) / double(steps - 1));
  }
  return times;
}

}  // namespace

ExperimentConfig parse_config(const json& doc, std::optional<std::uint64_t> seed_override) {
  if (!doc.is_object()) fail("", "config must be a JSON object");
  static const std::set<std::string> known{"n", "h", "seed", "state", "generator", "variable", "point",
                                           "samples", "trials", "partitions", "threads", "times", "h_grid",
                                           "negative_control"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) fail(key, "unknown field");
  }
  try {
    ExperimentConfig cfg;
    if (doc.contains("n")) cfg.n = static_cast<Index>(count_field(doc["n"], "n", 1));
    if (cfg.n > 256) fail("n", "dimension above 256 is outside the supported range");
    if (doc.contains("h")) cfg.h = positive_number(doc["h"], "h");
    if (doc.contains("seed")) cfg.seed = count_field(doc["seed"], "seed", 0);
    if (seed_override) cfg.seed = *seed_override;
    if (doc.contains("samples")) cfg.samples = count_field(doc["samples"], "samples", 2);
    if (doc.contains("trials")) cfg.trials = count_field(doc["trials"], "trials", 1);
    if (doc.contains("partitions")) cfg.mc.partitions = count_field(doc["partitions"], "partitions", 1);
    if (doc.contains("threads")) cfg.mc.threads = count_field(doc["threads"], "threads", 1);
    if (doc.contains("negative_control")) {
      if (!doc["negative_control"].is_boolean()) fail("negative_control", "expected a boolean");
      cfg.negative_control = doc["negative_control"].get<bool>();
    }

    cfg.state = doc.contains("state") ? parse_state(doc["state"], cfg.n, cfg.h, cfg.state_kind, "state")
                                      : parse_state(json{{"maximally_mixed", true}}, cfg.n, cfg.h,
                                                    cfg.state_kind, "state");
    cfg.generator = parse_generator(doc.contains("generator") ? doc["generator"] : json{{"harmonic", {{"k", 1.0}}}},
                                    cfg.n, cfg.seed, cfg.generator_kind, "generator");
    cfg.variable = doc.contains("variable")
                       ? parse_variable(doc["variable"], cfg.n, cfg.seed, "variable")
                       : PolynomialVariabled::quadratic(BlockOperatord::identity(cfg.n));
    if (doc.contains("point")) {
      try {
        cfg.point = io::phase_vector_from_json(doc["point"], "point");
      } catch (const io::FormatError& e) {
        fail(e);
      }
      if (cfg.point->dim() != cfg.n) fail("point", "dimension does not match n");
    }
    cfg.times = doc.contains("times") ? parse_times(doc["times"], "times") : parse_times(json{{"start", 0.0}, {"stop", 1.0}, {"steps", 11}}, "times");
    if (doc.contains("h_grid")) {
      const json& g = doc["h_grid"];
      if (!g.is_array()) fail("h_grid", "expected an array");
      for (std::size_t i = 0; i < g.size(); ++i) {
        cfg.h_grid.push_back(positive_number(g[i], "h_grid[" + std::to_string(i) + "]"));
      }
    } else {
      cfg.h_grid = {1e-1, 1e-2, 1e-3, 1e-4};
    }
    return cfg;
  } catch (const io::FormatError& e) {
    fail(e);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    fail("", e.what());
  }
}

ExperimentConfig load_config(const std::string& path, std::optional<std::uint64_t> seed_override) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config error: cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    // nlohmann reports "line L, column C" in the message.
    throw ConfigError("config error in " + path + ": " + e.what());
  }
  return parse_config(doc, seed_override);
}

}  // namespace pcsft::cli
