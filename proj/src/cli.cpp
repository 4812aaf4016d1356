// Copyright 2026 The iopsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "iopsim/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "iopsim/error.hpp"
#include "iopsim/iop.hpp"
#include "iopsim/properties.hpp"
#include "iopsim/scenarios.hpp"
#include "iopsim/serialize.hpp"

namespace iopsim::cli {

namespace {

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  double hbar = 1.0;
  std::vector<std::string> tolerances;
  std::string out_path;
  bool json = false;
};

std::uint64_t resolve_seed(const GlobalOptions& g) {
  if (g.seed) return *g.seed;
  const char* env = std::getenv("IOPSIM_SEED");
  if (env == nullptr || *env == '\0') return 0;
  const std::string text(env);
  std::uint64_t value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw Error(ErrorCode::BadParameter, "IOPSIM_SEED is not an unsigned integer: '" + text + "'");
  }
  return value;
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const std::string& item : items) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::BadParameter, "--tol expects name=value, got '" + item + "'");
    }
    const std::string value = item.substr(eq + 1);
    double v = 0.0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
    if (value.empty() || res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
      throw Error(ErrorCode::BadParameter, "--tol value for '" + item.substr(0, eq) + "' is not a number");
    }
    if (!(v > 0.0)) throw Error(ErrorCode::BadParameter, "tolerances must be positive");
    out[item.substr(0, eq)] = v;
  }
  return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::BadParameter, "cannot open output file '" + path + "'");
  file << text;
}

int do_run(const std::string& scenario, const std::map<std::string, std::string>& params,
           const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  ScenarioConfig cfg;
  cfg.hbar = g.hbar;
  cfg.seed = resolve_seed(g);
  cfg.tolerances = parse_tolerances(g.tolerances);
  const ScenarioReport report = run_scenario(scenario, params, cfg);
  const Json j = report.to_json();
  emit(j.dump(2) + "\n", g.out_path, out);
  const bool ok = j.at("all_passed").get<bool>();
  for (const Json& c : j.at("checks")) {
    if (!c.at("passed").get<bool>()) err << "FAIL " << c.at("name").get<std::string>() << "\n";
  }
  if (!g.out_path.empty()) {
    out << scenario << ": " << (ok ? "all checks passed" : "checks failed") << " -> " << g.out_path << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

std::string first_failure(const ValidationReport& v) {
  if (!v.square) return "DimensionMismatch";
  if (!v.hermitian) return "NotHermitian";
  if (!v.unit_trace) return "TraceNotOne";
  if (!v.positive) return "NotPositive";
  return "";
}

int do_validate(const std::string& path, const GlobalOptions& g, std::ostream& out) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  std::vector<CMatrix> ops;
  try {
    ops = operators_from_json(parse_json(buffer.str()));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, e.what());
  }
  bool all_valid = true;
  Json verdicts = Json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const ValidationReport v = inspect(ops[i]);
    all_valid = all_valid && v.valid();
    Json j;
    j["index"] = i;
    j["dim"] = ops[i].rows();
    j["valid"] = v.valid();
    j["error"] = v.valid() ? Json(nullptr) : Json(first_failure(v));
    j["hermiticity_residual"] = v.hermiticity_residual;
    j["trace_residual"] = v.trace_residual;
    j["min_eigenvalue"] = v.min_eigenvalue;
    verdicts.push_back(j);
    text << "operator " << i << " (dim " << ops[i].rows() << "): "
         << (v.valid() ? "valid" : "invalid (" + first_failure(v) + ")")
         << " hermiticity_residual=" << v.hermiticity_residual << " trace_residual=" << v.trace_residual
         << " min_eigenvalue=" << v.min_eigenvalue << "\n";
  }
  if (g.json) {
    Json doc;
    doc["file"] = path;
    doc["operators"] = std::move(verdicts);
    doc["all_valid"] = all_valid;
    emit(doc.dump(2) + "\n", g.out_path, out);
  } else {
    emit(text.str(), g.out_path, out);
  }
  return all_valid ? kExitOk : kExitCheckFailed;
}

int do_selftest(std::size_t trials, std::size_t steps, const GlobalOptions& g, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(g);
  std::vector<properties::PropertyResult> results;
  for (std::size_t d : {2, 3, 4, 8}) {
    auto suite = properties::theorem_suite(d, trials, seed);
    results.insert(results.end(), suite.begin(), suite.end());
  }
  results.push_back(properties::condensation_invariance(trials, steps, seed));
  bool ok = true;
  Json doc = Json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    ok = ok && r.passed;
    Json j;
    j["name"] = r.name;
    j["dim"] = r.dim;
    j["trials"] = r.trials;
    j["worst"] = std::isfinite(r.worst) ? Json(r.worst) : Json(nullptr);
    j["tolerance"] = r.tolerance;
    j["passed"] = r.passed;
    if (!r.failure.empty()) j["failure"] = r.failure;
    doc.push_back(std::move(j));
    text << (r.passed ? "PASS " : "FAIL ") << r.name << " dim=" << (r.dim == 0 ? "4,6,8" : std::to_string(r.dim)) << " trials=" << r.trials
         << " worst=" << r.worst << " tol=" << r.tolerance;
    if (!r.failure.empty()) text << " error=" << r.failure;
    text << "\n";
  }
  if (g.json) {
    Json wrapped;
    wrapped["seed"] = seed;
    wrapped["properties"] = std::move(doc);
    wrapped["all_passed"] = ok;
    emit(wrapped.dump(2) + "\n", g.out_path, out);
  } else {
    emit(text.str(), g.out_path, out);
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-dimensional information-operator simulator"};
  app.require_subcommand(1);
  GlobalOptions g;
  std::uint64_t seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "RNG seed (falls back to IOPSIM_SEED, then 0)");
  app.add_option("--hbar", g.hbar, "Reduced Planck constant")->check(CLI::PositiveNumber);
  app.add_option("--tol", g.tolerances, "Tolerance override name=value (repeatable)");
  app.add_option("--out", g.out_path, "Write the report to this file instead of stdout");
  app.add_flag("--json", g.json, "Emit JSON for validate/selftest");
  app.fallthrough();

  auto* run = app.add_subcommand("run", "Run a scenario and emit its JSON report");
  std::string scenario;
  run->add_option("scenario", scenario, "stern-gerlach | cat | spin-one | two-slit")->required();
  std::map<std::string, std::string> params;
  const std::vector<std::pair<std::string, std::string>> param_flags = {
      {"p-up", "Prior weight of spin up (stern-gerlach)"},
      {"samples", "Monte-Carlo draws (stern-gerlach)"},
      {"p-plus", "Weight of the + subspace (cat)"},
      {"steps", "Number of time steps (cat, two-slit)"},
      {"dt", "Time step (cat, two-slit)"},
      {"grid", "Grid sites (two-slit)"},
      {"slits", "Slit ranges begin:end,... (two-slit)"},
      {"p-pass", "Transmission of open slit sites (two-slit)"},
      {"width", "Incoming packet width in sites (two-slit)"},
  };
  std::map<std::string, std::string> raw_params;
  for (const auto& [name, help] : param_flags) {
    run->add_option("--" + name, raw_params[name], help);
  }

  auto* validate_cmd = app.add_subcommand("validate", "Check operator files against the i-operator conditions");
  std::string path;
  validate_cmd->add_option("file", path, "Operator JSON file")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the randomized invariant suites");
  std::size_t trials = 1000;
  std::size_t steps = 100;
  selftest->add_option("--trials", trials, "Trials per property and dimension")->check(CLI::PositiveNumber);
  selftest->add_option("--steps", steps, "Evolution steps for condensation invariance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (seed_opt->count() > 0) g.seed = seed_value;

  try {
    if (run->parsed()) {
      for (const auto& [name, help] : param_flags) {
        if (run->get_option("--" + name)->count() > 0) params[name] = raw_params[name];
      }
      return do_run(scenario, params, g, out, err);
    }
    if (validate_cmd->parsed()) return do_validate(path, g, out);
    return do_selftest(trials, steps, g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace iopsim::cli
