#include <doctest.h>

#include <fstream>
#include <sstream>

#include "pcsft/experiments.hpp"

using namespace pcsft;
using namespace pcsft::cli;
using io::json;

namespace {

std::string config_error(const json& doc) {
  try {
    parse_config(doc);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "<no error>";
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::vector<std::string>& header) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  header.clear();
  std::stringstream hs(line);
  for (std::string cell; std::getline(hs, cell, ',');) header.push_back(cell);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream rs(line);
    for (std::string cell; std::getline(rs, cell, ',');) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  FAIL("missing column " << name);
  return 0;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("defaults") {
  const auto cfg = parse_config(json::object());
  CHECK(cfg.n == 4);
  CHECK(cfg.seed == 42);
  CHECK(cfg.state_kind == "maximally_mixed");
  CHECK(dispersion(cfg.state) == doctest::Approx(2 * cfg.h));
  CHECK(cfg.times.size() == 11);
  CHECK(cfg.h_grid.size() == 4);
  CHECK(parse_config(json::object(), 7).seed == 7);
}

TEST_CASE("config errors name the field") {
  CHECK(config_error(json{{"bogus", 1}}).find("bogus") != std::string::npos);
  CHECK(config_error(json{{"n", 0}}).find("at n") != std::string::npos);
  CHECK(config_error(json{{"n", 1000}}).find("at n") != std::string::npos);
  CHECK(config_error(json{{"h", -1.0}}).find("at h") != std::string::npos);
  CHECK(config_error(json{{"samples", 1}}).find("at samples") != std::string::npos);
  CHECK(config_error(json::parse(R"({"n": 1, "state": {"B": [[1, 0.2], [0, 1]]}})")).find("state.B") !=
        std::string::npos);
  CHECK(config_error(json::parse(R"({"n": 2, "state": {"B": [[1, 0], [0, 1]]}})")).find("does not match n") !=
        std::string::npos);
  CHECK(config_error(json::parse(R"({"n": 1, "generator": {"warp": {}}})")).find("generator") != std::string::npos);
  CHECK(config_error(json::parse(
                         R"({"n": 1, "generator": {"matrix": {"n": 1, "blocks": {"A11": [[1]], "A12": [[1]], "A21": [[0]], "A22": [[1]]}}}})"))
            .find("symmetric") != std::string::npos);
  CHECK(config_error(json::parse(
                         R"({"n": 1, "variable": {"terms": [{"factors": [{"n": 1, "blocks": {"A11": [[1]], "A12": [[0]], "A21": [[0]], "A22": [[2]]}}]}]}})"))
            .find("variable.terms[0].factors[0]") != std::string::npos);
  CHECK(config_error(json::parse(R"({"variable": {"terms": [{"factors": []}]}})")).find("factors") !=
        std::string::npos);
  CHECK(config_error(json::parse(R"({"times": {"start": 0, "stop": 1}})")).find("times.steps") != std::string::npos);
  CHECK(config_error(json::parse(R"({"n": 1, "h": 0.5, "state": {"pure": {"psi_re": [1], "psi_im": [0], "h": 0.25}}})"))
            .find("state.pure.h") != std::string::npos);
}

TEST_CASE("syntax errors report line and column") {
  const std::string path = "pcsft_bad_config.json";
  {
    std::ofstream out(path);
    out << "{\n  \"n\": 2,\n  \"h\": ,\n}\n";
  }
  try {
    load_config(path);
    FAIL("expected a config error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_config("does/not/exist.json"), ConfigError);
}

TEST_CASE("seeded shortcuts expand deterministically") {
  const json doc = json::parse(
      R"({"n": 3, "generator": {"random_scommuting": {}}, "variable": {"terms": [{"factors": [{"random_positive": {}}]}]}})");
  const auto a = parse_config(doc), b = parse_config(doc), c = parse_config(doc, 43);
  CHECK(a.generator.matrix() == b.generator.matrix());
  CHECK(a.variable.terms()[0].factors[0].matrix() == b.variable.terms()[0].factors[0].matrix());
  CHECK(a.generator.matrix() != c.generator.matrix());
  CHECK(is_s_commuting(a.generator));
}

TEST_CASE("verify report") {
  auto cfg = parse_config(json{{"n", 2}, {"trials", 3}, {"samples", 2000}});
  const auto out = cmd_verify(cfg, OutputFormat::Json);
  CHECK(out.passed);
  const json report = json::parse(out.body);
  CHECK(report["passed"].get<bool>());
  for (const auto& c : report["checks"]) {
    CHECK(c["status"] == "pass");
    CHECK(c.contains("max_residual"));
  }
  CHECK(cmd_verify(cfg, OutputFormat::Json).body == out.body);

  const auto csv = cmd_verify(cfg, OutputFormat::Csv);
  CHECK(csv.body.rfind("check,status,max_residual,threshold\n", 0) == 0);
}

TEST_CASE("verify negative control") {
  const json doc = json::parse(R"({"n": 1, "trials": 2, "samples": 1000,
      "state": {"B": [[1, 0], [0, 2]]}, "negative_control": true})");
  const auto out = cmd_verify(parse_config(doc), OutputFormat::Json);
  CHECK(out.passed);
  const json report = json::parse(out.body);
  const auto& last = report["checks"].back();
  CHECK(last["check"] == "state_symplectic_invariance");
  CHECK(last["detail"].get<std::string>().find("observed not invariant") != std::string::npos);

  // The same state without the flag is a failure.
  json plain = doc;
  plain["negative_control"] = false;
  CHECK_FALSE(cmd_verify(parse_config(plain), OutputFormat::Json).passed);
}

TEST_CASE("correspondence command") {
  const json base = json::parse(R"({"n": 2, "h": 0.01, "samples": 50000,
      "state": {"pure": {"psi_re": [0.6, 0], "psi_im": [0, 0.8]}}})");
  std::vector<std::string> header;

  // Quadratic variable: all three agree.
  auto rows = parse_csv(cmd_correspondence(parse_config(base), OutputFormat::Csv).body, header);
  REQUIRE(rows.size() == 1);
  const auto& r = rows[0];
  CHECK(r[column(header, "classical_exact")] == doctest::Approx(r[column(header, "quantum")]).epsilon(1e-10));
  CHECK(std::abs(r[column(header, "classical_mc")] - r[column(header, "classical_exact")]) <=
        4 * r[column(header, "classical_mc_stderr")]);

  // Zero variable.
  json zero = base;
  zero["variable"] = json{{"terms", json::array()}};
  rows = parse_csv(cmd_correspondence(parse_config(zero), OutputFormat::Csv).body, header);
  for (const double x : rows[0]) CHECK(x == 0);

  // Quartic-only: no quantum counterpart, classical value from Wick.
  json quartic = base;
  quartic["variable"] = json::parse(R"({"terms": [{"factors": ["identity", "identity"]}]})");
  rows = parse_csv(cmd_correspondence(parse_config(quartic), OutputFormat::Csv).body, header);
  CHECK(rows[0][column(header, "quantum")] == 0);
  // Pure state: |w|^2 = h * chi^2 with two degrees of freedom, so E[(|w|^2 / 2)^2] = 2 h^2.
  CHECK(rows[0][column(header, "classical_exact")] == doctest::Approx(2e-4).epsilon(1e-12));

  json mixed_dispersion = base;
  mixed_dispersion["state"] = json::parse(R"({"B": [[0.01, 0, 0, 0], [0, 0.01, 0, 0], [0, 0, 0.01, 0], [0, 0, 0, 0.01]]})");
  CHECK_THROWS_AS(cmd_correspondence(parse_config(mixed_dispersion), OutputFormat::Csv), ConfigError);

  json too_deep = base;
  too_deep["variable"] = json::parse(R"({"terms": [{"factors": ["identity", "identity", "identity", "identity"]}]})");
  CHECK_THROWS_AS(cmd_correspondence(parse_config(too_deep), OutputFormat::Csv), ConfigError);
}

TEST_CASE("scaling command") {
  const json quartic = json::parse(R"({"n": 2, "h": 0.1,
      "variable": {"terms": [{"factors": ["identity"]}, {"factors": [{"random_positive": {}}, {"random_positive": {}}]}]}})");
  const auto out = cmd_scaling(parse_config(quartic), OutputFormat::Csv);
  REQUIRE(out.summary.has_value());
  const json summary = json::parse(*out.summary);
  CHECK(summary["slope"].get<double>() >= 1.98);
  CHECK(summary["slope"].get<double>() <= 2.02);
  CHECK_FALSE(summary["exact"].get<bool>());

  const json quadratic = json::parse(R"({"n": 2, "h": 0.1, "variable": {"terms": [{"factors": [{"random_scommuting": {}}]}]}})");
  const json j = json::parse(cmd_scaling(parse_config(quadratic), OutputFormat::Json).body);
  CHECK(j["summary"]["exact"].get<bool>());
  CHECK(j["summary"]["slope"].is_null());
  CHECK(j["rows"].size() == 4);

  json short_grid = quadratic;
  short_grid["h_grid"] = {0.1, 0.01};
  CHECK_THROWS_AS(cmd_scaling(parse_config(short_grid), OutputFormat::Csv), ConfigError);
  json unsorted = quadratic;
  unsorted["h_grid"] = {0.1, 0.001, 0.01};
  CHECK_THROWS_AS(cmd_scaling(parse_config(unsorted), OutputFormat::Csv), ConfigError);
}

TEST_CASE("dynamics command") {
  std::vector<std::string> header;
  const json harmonic = json::parse(R"({"n": 2, "h": 0.5, "generator": {"harmonic": {"k": 2}},
      "state": {"B": [[0.3, 0, 0, 0], [0, 0.2, 0, 0], [0, 0, 0.3, 0], [0, 0, 0, 0.2]]},
      "point": {"q": [1, 0], "p": [0, 0.5]}, "times": {"start": 0, "stop": 3, "steps": 13}})");
  auto rows = parse_csv(cmd_dynamics(parse_config(harmonic), OutputFormat::Csv).body, header);
  REQUIRE(rows.size() == 13);
  const auto d = column(header, "dispersion");
  CHECK(rows[0][d] == doctest::Approx(1.0));
  CHECK(rows[0][column(header, "q_1")] == 1.0);
  CHECK(rows[0][column(header, "p_2")] == 0.5);
  for (const auto& row : rows) CHECK(std::abs(row[d] - rows[0][d]) <= 1e-9 * rows[0][d]);

  json generic = harmonic;
  generic["generator"] = json::parse(R"({"random_symmetric": {"scale": 1}})");
  rows = parse_csv(cmd_dynamics(parse_config(generic), OutputFormat::Csv).body, header);
  double drift = 0;
  for (const auto& row : rows) drift = std::max(drift, std::abs(row[d] - rows[0][d]) / rows[0][d]);
  CHECK(drift > 1e-3);

  // Overflowing evolution is reported, not printed.
  json blowup = generic;
  blowup["generator"] = json::parse(R"({"random_symmetric": {"scale": 1000}})");
  blowup["times"] = {0.0, 1e6};
  CHECK_THROWS(cmd_dynamics(parse_config(blowup), OutputFormat::Csv));
}

TEST_CASE("ensemble command") {
  std::vector<std::string> header;
  const json doc = json::parse(R"({"n": 2, "h": 0.05, "samples": 20000, "generator": {"random_scommuting": {}},
      "times": [0, 0.5]})");
  auto rows = parse_csv(cmd_ensemble(parse_config(doc), OutputFormat::Csv).body, header);
  REQUIRE(rows.size() == 2);
  CHECK(header.size() == 1 + 8 + 4);
  for (const auto& row : rows) {
    CHECK(row[column(header, "max_residual_in_se")] <= 5.0);
    CHECK(row[column(header, "dispersion_exact")] == doctest::Approx(0.1));
  }
  json threaded = doc;
  threaded["threads"] = 4;
  CHECK(cmd_ensemble(parse_config(threaded), OutputFormat::Csv).body == cmd_ensemble(parse_config(doc), OutputFormat::Csv).body);

  json generic = doc;
  generic["generator"] = json::parse(R"({"random_symmetric": {}})");
  CHECK_THROWS_AS(cmd_ensemble(parse_config(generic), OutputFormat::Csv), ConfigError);
}

}
