//
// Copyright 2026 The mi-accountant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// mi-accountant: membership-inference advantage bounds for adaptive
// compositions of (sub)sampled Gaussian mechanisms.
//
//   mi-accountant bound --sigma 1 --q 1 --r 1 --steps 1 --seed 42
//   mi-accountant sweep --config run.json --sweep-param sigma ...
//   mi-accountant attack --sigma 1 --q 1 --r 1 --steps 1 --trials 100000 --seed 7
//   mi-accountant lemma-check
//
// Exit codes: 0 success, 1 computation failure, 2 configuration error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mia/attack.hpp"
#include "mia/gaussian_tv.hpp"
#include "mia/mc.hpp"
#include "mia/quadrature.hpp"
#include "mia/rdp.hpp"
#include "mia/report.hpp"
#include "mia/rng.hpp"
#include "mia/schedule.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputeError = 1;
constexpr int kExitConfigError = 2;

struct RunConfig {
  // Schedule source: either inline homogeneous parameters, explicit steps
  // from a config file, or DP-SGD parameters.
  std::optional<double> sigma;
  std::optional<double> q;
  std::optional<double> r;
  std::optional<std::int64_t> steps;
  std::optional<double> clipping;
  std::optional<double> noise_multiplier;
  std::vector<mia::ScheduleStep> explicit_steps;
  bool dpsgd = false;

  std::int64_t samples = 1'000'000;
  std::int64_t trials = 0;
  std::optional<std::uint64_t> seed;
  double delta = 1e-5;
  double confidence = 0.99;
  int threads = 0;
  std::string mode = "add_remove";
  std::string format = "json";
  std::string out_path;

  // Sweep axis.
  std::string sweep_param;
  double sweep_min = 0.0;
  double sweep_max = 0.0;
  int sweep_count = 0;
  std::string sweep_scale = "log";
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config parse error in " + path + ": " + e.what());
  }
  try {
    if (j.contains("schedule")) {
      for (const auto& step : j.at("schedule")) {
        cfg.explicit_steps.push_back(
            {step.at("sigma").get<double>(), step.at("q").get<double>(),
             step.at("r").get<double>()});
      }
    }
    if (j.contains("dpsgd")) {
      const auto& d = j.at("dpsgd");
      cfg.dpsgd = true;
      cfg.clipping = d.at("clipping").get<double>();
      cfg.noise_multiplier = d.at("noise_multiplier").get<double>();
      cfg.q = d.at("q").get<double>();
      cfg.steps = d.at("steps").get<std::int64_t>();
    }
    if (j.contains("samples")) cfg.samples = j.at("samples").get<std::int64_t>();
    if (j.contains("trials")) cfg.trials = j.at("trials").get<std::int64_t>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("delta")) cfg.delta = j.at("delta").get<double>();
    if (j.contains("confidence"))
      cfg.confidence = j.at("confidence").get<double>();
    if (j.contains("mode")) cfg.mode = j.at("mode").get<std::string>();
    if (j.contains("sweep")) {
      const auto& s = j.at("sweep");
      cfg.sweep_param = s.at("param").get<std::string>();
      cfg.sweep_min = s.at("min").get<double>();
      cfg.sweep_max = s.at("max").get<double>();
      cfg.sweep_count = s.at("count").get<int>();
      if (s.contains("scale")) cfg.sweep_scale = s.at("scale").get<std::string>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config field error in " + path + ": " + e.what());
  }
}

mia::MechanismSchedule build_schedule(const RunConfig& cfg) {
  int sources = 0;
  if (!cfg.explicit_steps.empty()) ++sources;
  if (cfg.dpsgd) ++sources;
  if (cfg.sigma.has_value()) ++sources;
  if (sources == 0) {
    throw ConfigError(
        "no schedule source: give --sigma/--q/--r/--steps, or a config file "
        "with \"schedule\" or \"dpsgd\"");
  }
  if (sources > 1) {
    throw ConfigError("exactly one schedule source must be given");
  }

  mia::MechanismSchedule schedule;
  if (!cfg.explicit_steps.empty()) {
    schedule.steps = cfg.explicit_steps;
  } else if (cfg.dpsgd) {
    schedule = mia::normalize_dpsgd(*cfg.clipping, *cfg.noise_multiplier,
                                    cfg.q.value_or(1.0), cfg.steps.value_or(1));
  } else {
    const std::int64_t t = cfg.steps.value_or(1);
    if (t < 1) throw ConfigError("--steps must be positive");
    schedule.steps.assign(static_cast<std::size_t>(t),
                          {*cfg.sigma, cfg.q.value_or(1.0), cfg.r.value_or(1.0)});
  }
  schedule.mode = mia::neighboring_mode_from_string(cfg.mode);
  return mia::validate_schedule(schedule);
}

std::uint64_t require_seed(const RunConfig& cfg) {
  if (!cfg.seed.has_value()) {
    throw ConfigError("--seed is required (no wall-clock default)");
  }
  return *cfg.seed;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw ConfigError("cannot open output file: " + cfg.out_path);
  out << text;
}

int run_bound(const RunConfig& cfg) {
  const auto schedule = build_schedule(cfg);
  mia::McConfig mc{cfg.samples, require_seed(cfg), cfg.confidence, 16384,
                   cfg.threads};
  const auto t0 = std::chrono::steady_clock::now();
  const mia::BoundReport report =
      mia::compute_bound_report(schedule, mc, cfg.delta);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - t0;
  std::cerr << "bound computed in " << elapsed.count() << " s\n";

  if (cfg.format == "csv") {
    emit(cfg, mia::bound_report_csv_header() + "\n" +
                  mia::to_csv_row(report) + "\n");
  } else {
    emit(cfg, mia::to_json(report));
  }
  return kExitOk;
}

int run_attack_cmd(const RunConfig& cfg) {
  const auto schedule = build_schedule(cfg);
  const std::int64_t trials = cfg.trials > 0 ? cfg.trials : 100'000;
  mia::AttackConfig acfg{trials, require_seed(cfg), cfg.confidence, 16384,
                         cfg.threads};
  const auto outcome = mia::run_attack(schedule, acfg);
  std::ostringstream out;
  if (cfg.format == "csv") {
    out << "trials,correct,empirical_advantage,ci_halfwidth,confidence\n"
        << outcome.trials << ',' << outcome.correct << ','
        << mia::format_double(outcome.empirical_advantage) << ','
        << mia::format_double(outcome.ci_halfwidth) << ','
        << mia::format_double(outcome.confidence) << "\n";
  } else {
    out << "{\n  \"trials\": " << outcome.trials
        << ",\n  \"correct\": " << outcome.correct
        << ",\n  \"empirical_advantage\": "
        << mia::format_double(outcome.empirical_advantage)
        << ",\n  \"ci_halfwidth\": "
        << mia::format_double(outcome.ci_halfwidth)
        << ",\n  \"confidence\": " << mia::format_double(outcome.confidence)
        << ",\n  \"seed\": " << acfg.seed << "\n}\n";
  }
  emit(cfg, out.str());
  return kExitOk;
}

std::vector<double> sweep_values(const RunConfig& cfg) {
  if (cfg.sweep_param.empty()) {
    throw ConfigError("sweep needs --sweep-param (or a \"sweep\" config key)");
  }
  if (cfg.sweep_count < 2) throw ConfigError("sweep count must be >= 2");
  if (!(cfg.sweep_min < cfg.sweep_max)) {
    throw ConfigError("sweep min must be < max");
  }
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(cfg.sweep_count));
  if (cfg.sweep_scale == "log") {
    if (!(cfg.sweep_min > 0.0)) {
      throw ConfigError("log-scale sweep needs min > 0");
    }
    const double lmin = std::log(cfg.sweep_min);
    const double lmax = std::log(cfg.sweep_max);
    for (int i = 0; i < cfg.sweep_count; ++i) {
      values.push_back(
          std::exp(lmin + (lmax - lmin) * i / (cfg.sweep_count - 1)));
    }
  } else if (cfg.sweep_scale == "linear") {
    for (int i = 0; i < cfg.sweep_count; ++i) {
      values.push_back(cfg.sweep_min +
                       (cfg.sweep_max - cfg.sweep_min) * i /
                           (cfg.sweep_count - 1));
    }
  } else {
    throw ConfigError("sweep scale must be log or linear");
  }
  return values;
}

int run_sweep(const RunConfig& cfg) {
  const auto base = build_schedule(cfg);
  const auto values = sweep_values(cfg);
  const std::uint64_t seed = require_seed(cfg);
  const std::string& param = cfg.sweep_param;
  if (param != "sigma" && param != "q" && param != "r" &&
      param != "noise_multiplier") {
    throw ConfigError("unknown sweep parameter: " + param);
  }
  if (param == "noise_multiplier" && !cfg.dpsgd) {
    throw ConfigError("noise_multiplier sweep needs a dpsgd schedule source");
  }

  struct Row {
    double value;
    mia::BoundReport report;
    std::optional<mia::AttackOutcome> attack;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < values.size(); ++i) {
    mia::MechanismSchedule schedule = base;
    for (auto& step : schedule.steps) {
      if (param == "sigma" || param == "noise_multiplier") {
        step.sigma = values[i];
      } else if (param == "q") {
        step.q = values[i];
      } else {
        step.r = values[i];
      }
    }
    mia::validate_schedule(schedule);
    const std::uint64_t row_seed = mia::mix64(seed ^ mia::mix64(1000 + i));
    mia::McConfig mc{cfg.samples, row_seed, cfg.confidence, 16384,
                     cfg.threads};
    Row row{values[i], mia::compute_bound_report(schedule, mc, cfg.delta), {}};
    if (cfg.trials > 0) {
      row.attack = mia::run_attack(
          schedule,
          {cfg.trials, row_seed, cfg.confidence, 16384, cfg.threads});
    }
    rows.push_back(std::move(row));
  }

  std::ostringstream out;
  if (cfg.format == "json") {
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      out << "  {\"swept_value\": " << mia::format_double(row.value)
          << ", \"eps\": " << mia::format_double(row.report.eps)
          << ", \"adv_tv\": " << mia::format_double(row.report.adv_tv.value)
          << ", \"adv_tv_ci\": "
          << mia::format_double(row.report.adv_tv.ci_halfwidth)
          << ", \"adv_pinsker\": "
          << mia::format_double(row.report.adv_pinsker)
          << ", \"adv_baseline\": "
          << mia::format_double(row.report.adv_baseline_eps);
      if (row.attack) {
        out << ", \"empirical_adv\": "
            << mia::format_double(row.attack->empirical_advantage)
            << ", \"empirical_adv_ci\": "
            << mia::format_double(row.attack->ci_halfwidth);
      }
      out << "}" << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    out << "]\n";
  } else {
    out << "swept_value,eps,adv_tv,adv_tv_ci,adv_pinsker,adv_baseline,"
           "empirical_adv,empirical_adv_ci\n";
    for (const auto& row : rows) {
      out << mia::format_double(row.value) << ','
          << mia::format_double(row.report.eps) << ','
          << mia::format_double(row.report.adv_tv.value) << ','
          << mia::format_double(row.report.adv_tv.ci_halfwidth) << ','
          << mia::format_double(row.report.adv_pinsker) << ','
          << mia::format_double(row.report.adv_baseline_eps) << ',';
      if (row.attack) {
        out << mia::format_double(row.attack->empirical_advantage) << ','
            << mia::format_double(row.attack->ci_halfwidth);
      } else {
        out << ',';
      }
      out << "\n";
    }
  }
  emit(cfg, out.str());
  return kExitOk;
}

int run_lemma_check(const RunConfig& cfg, bool bad_constant) {
  const std::vector<double> r_grid{0.5, 1.0, 2.0};
  const std::vector<double> sigma_grid{0.5, 1.0, 2.0};
  const std::vector<double> q_grid{0.1, 0.5, 1.0};
  const std::vector<double> a_grid{0.25, 0.5, 0.95, 1.0};
  const double leading = bad_constant ? 1.0 : 0.5;

  double lemma_max = 0.0;
  for (double r : r_grid)
    for (double sigma : sigma_grid)
      for (double q : q_grid)
        for (double a : a_grid)
          lemma_max =
              std::max(lemma_max, mia::check_subsampling_lemma(r, sigma, q, a));

  // Closed form vs quadrature, including the r = 0 singularity branch.
  double closed_max = 0.0;
  std::vector<double> r_grid_with_zero = r_grid;
  r_grid_with_zero.insert(r_grid_with_zero.begin(), 0.0);
  for (double r : r_grid_with_zero)
    for (double sigma : sigma_grid)
      for (double a : a_grid) {
        const double closed = mia::detail::tva_gaussian_closed_with_constant(
            {r, sigma, a}, leading);
        const mia::GaussianMixture p{{1.0, r, sigma}};
        const mia::GaussianMixture q0{{1.0, 0.0, sigma}};
        const double quad = mia::tva_quadrature(p, q0, a).value;
        closed_max = std::max(closed_max, std::abs(closed - quad));
      }

  // Monotonicity in r of the closed form on r in {0.1, ..., 5.0}.
  double worst_decrease = 0.0;
  for (double sigma : sigma_grid)
    for (double a : a_grid) {
      double prev = -1.0;
      for (int i = 1; i <= 50; ++i) {
        const double r = 0.1 * i;
        const double v = mia::detail::tva_gaussian_closed_with_constant(
            {r, sigma, a}, leading);
        if (prev >= 0.0) worst_decrease = std::min(worst_decrease, v - prev);
        prev = v;
      }
    }

  constexpr double kTol = 1e-8;
  const bool lemma_pass = lemma_max <= kTol;
  const bool closed_pass = closed_max <= kTol;
  const bool mono_pass = worst_decrease >= -1e-12;

  std::ostringstream out;
  if (cfg.format == "json") {
    out << "{\n  \"subsampling_lemma\": {\"max_discrepancy\": "
        << mia::format_double(lemma_max) << ", \"tolerance\": 1e-08, \"pass\": "
        << (lemma_pass ? "true" : "false") << "},\n"
        << "  \"closed_form_vs_quadrature\": {\"max_discrepancy\": "
        << mia::format_double(closed_max)
        << ", \"tolerance\": 1e-08, \"pass\": "
        << (closed_pass ? "true" : "false") << "},\n"
        << "  \"monotonicity_in_r\": {\"worst_decrease\": "
        << mia::format_double(worst_decrease) << ", \"pass\": "
        << (mono_pass ? "true" : "false") << "},\n"
        << "  \"pass\": "
        << ((lemma_pass && closed_pass && mono_pass) ? "true" : "false")
        << "\n}\n";
  } else {
    out << (lemma_pass ? "PASS" : "FAIL")
        << " subsampling-lemma max_discrepancy="
        << mia::format_double(lemma_max) << " tol=1e-08\n"
        << (closed_pass ? "PASS" : "FAIL")
        << " closed-form-vs-quadrature max_discrepancy="
        << mia::format_double(closed_max) << " tol=1e-08\n"
        << (mono_pass ? "PASS" : "FAIL")
        << " monotonicity-in-r worst_decrease="
        << mia::format_double(worst_decrease) << "\n";
  }
  emit(cfg, out.str());
  return (lemma_pass && closed_pass && mono_pass) ? kExitOk
                                                  : kExitComputeError;
}

void add_common_options(CLI::App* cmd, RunConfig& cfg, std::string& config_path,
                        bool& seed_set, std::uint64_t& seed_value) {
  cmd->add_option("--config", config_path, "JSON config file");
  cmd->add_option("--sigma", [&cfg](const CLI::results_t& res) {
    cfg.sigma = std::stod(res[0]); return true; },
    "noise std per step (sensitivity units)");
  cmd->add_option("--q", [&cfg](const CLI::results_t& res) {
    cfg.q = std::stod(res[0]); return true; }, "subsampling rate");
  cmd->add_option("--r", [&cfg](const CLI::results_t& res) {
    cfg.r = std::stod(res[0]); return true; }, "L2 sensitivity per step");
  cmd->add_option("--steps", [&cfg](const CLI::results_t& res) {
    cfg.steps = std::stoll(res[0]); return true; }, "number of steps");
  cmd->add_option("--samples", cfg.samples, "Monte Carlo samples");
  cmd->add_option("--trials", cfg.trials, "attack trials");
  cmd->add_option("--seed", [&seed_set, &seed_value](const CLI::results_t& res) {
    seed_value = std::stoull(res[0]); seed_set = true; return true; },
    "RNG seed (required; no wall-clock default)");
  cmd->add_option("--delta", cfg.delta, "delta for (eps, delta) reporting");
  cmd->add_option("--confidence", cfg.confidence, "CI confidence level");
  cmd->add_option("--threads", cfg.threads,
                  "worker threads (0 = hardware); results do not depend on it");
  cmd->add_option("--mode", cfg.mode, "add_remove or replace");
  cmd->add_option("--format", cfg.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", cfg.out_path, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"membership-inference advantage bounds for (sub)sampled "
               "Gaussian compositions"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;
  bool seed_set = false;
  std::uint64_t seed_value = 0;
  bool bad_constant = false;

  auto* bound = app.add_subcommand("bound", "compute all bounds for one schedule");
  auto* sweep = app.add_subcommand("sweep", "bounds along a parameter axis");
  auto* attack = app.add_subcommand("attack", "simulate the Bayes-optimal attack");
  auto* lemma = app.add_subcommand("lemma-check", "verify the TV_a identities numerically");

  for (auto* cmd : {bound, sweep, attack}) {
    add_common_options(cmd, cfg, config_path, seed_set, seed_value);
  }
  sweep->add_option("--sweep-param", cfg.sweep_param,
                    "sigma, q, r, or noise_multiplier");
  sweep->add_option("--sweep-min", cfg.sweep_min, "axis minimum");
  sweep->add_option("--sweep-max", cfg.sweep_max, "axis maximum");
  sweep->add_option("--sweep-count", cfg.sweep_count, "number of grid points");
  sweep->add_option("--sweep-scale", cfg.sweep_scale, "log or linear");
  lemma->add_option("--format", cfg.format, "json or text");
  lemma->add_option("--out", cfg.out_path, "output file (default stdout)");
  lemma->add_flag("--bad-constant", bad_constant,
                  "debug: use a wrong closed-form constant (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (!config_path.empty()) load_config_file(config_path, cfg);
    if (seed_set) cfg.seed = seed_value;

    if (bound->parsed()) return run_bound(cfg);
    if (sweep->parsed()) return run_sweep(cfg);
    if (attack->parsed()) return run_attack_cmd(cfg);
    return run_lemma_check(cfg, bad_constant);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const mia::ScheduleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return kExitComputeError;
  }
}
