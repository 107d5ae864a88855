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

#include "mia/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace mia {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

BoundReport compute_bound_report(const MechanismSchedule& schedule,
                                 const McConfig& cfg, double delta) {
  validate_schedule(schedule);

  BoundReport report;
  report.steps = static_cast<std::int64_t>(schedule.steps.size());
  report.homogeneous = schedule.homogeneous();
  if (report.homogeneous) {
    report.sigma = schedule.steps.front().sigma;
    report.q = schedule.steps.front().q;
    report.r = schedule.steps.front().r;
  }
  report.neighboring_mode = to_string(schedule.mode);
  report.provenance = report.homogeneous ? "theorem" : "contribution-claim";
  report.seed = cfg.seed;
  report.delta = delta;

  report.adv_tv = mi_advantage_mc(schedule, cfg);

  const RdpCurve curve = rdp_curve(schedule, default_alpha_grid());
  // eps(alpha) is nondecreasing, but scan the whole grid anyway.
  double best_pinsker = std::numeric_limits<double>::infinity();
  double best_alpha = 1.0;
  for (std::size_t i = 0; i < curve.alphas.size(); ++i) {
    if (!std::isfinite(curve.eps[i])) continue;
    const double bound = std::sqrt(curve.eps[i] / 2.0);
    if (bound < best_pinsker) {
      best_pinsker = bound;
      best_alpha = curve.alphas[i];
    }
  }
  report.pinsker_alpha = best_alpha;
  report.pinsker_vacuous = best_pinsker > 1.0;
  report.adv_pinsker = std::min(1.0, best_pinsker);

  const EpsResult eps = eps_from_rdp(curve, delta);
  report.eps = eps.ed.eps;
  report.eps_alpha = eps.best_alpha;
  report.adv_baseline_eps = baseline_advantage_from_eps(eps.ed);

  if (schedule.mode == NeighboringMode::kReplace) {
    const auto adjust = [&](double v) {
      const double doubled = 2.0 * v;
      if (doubled > 1.0) report.vacuous = true;
      return std::min(1.0, doubled);
    };
    report.adv_tv.value = adjust(report.adv_tv.value);
    report.adv_tv.ci_halfwidth = 2.0 * report.adv_tv.ci_halfwidth;
    report.adv_pinsker = adjust(report.adv_pinsker);
    report.adv_baseline_eps = adjust(report.adv_baseline_eps);
    if (report.vacuous) report.pinsker_vacuous = report.adv_pinsker >= 1.0;
  }
  return report;
}

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_json(const BoundReport& r) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"schedule\": {\"steps\": " << r.steps
      << ", \"homogeneous\": " << bool_str(r.homogeneous);
  if (r.homogeneous) {
    out << ", \"sigma\": " << format_double(r.sigma)
        << ", \"q\": " << format_double(r.q)
        << ", \"r\": " << format_double(r.r);
  }
  out << ", \"neighboring_mode\": \"" << r.neighboring_mode
      << "\", \"provenance\": \"" << r.provenance << "\"},\n";
  out << "  \"adv_tv\": {\"value\": " << format_double(r.adv_tv.value)
      << ", \"ci_halfwidth\": " << format_double(r.adv_tv.ci_halfwidth)
      << ", \"confidence\": " << format_double(r.adv_tv.confidence)
      << ", \"samples\": " << r.adv_tv.samples << "},\n";
  out << "  \"adv_pinsker\": " << format_double(r.adv_pinsker)
      << ",\n  \"pinsker_alpha\": " << format_double(r.pinsker_alpha)
      << ",\n  \"pinsker_vacuous\": " << bool_str(r.pinsker_vacuous)
      << ",\n  \"adv_baseline_eps\": " << format_double(r.adv_baseline_eps)
      << ",\n  \"eps\": " << format_double(r.eps)
      << ",\n  \"delta\": " << format_double(r.delta)
      << ",\n  \"eps_alpha\": " << format_double(r.eps_alpha)
      << ",\n  \"vacuous\": " << bool_str(r.vacuous)
      << ",\n  \"seed\": " << r.seed << "\n}\n";
  return out.str();
}

BoundReport bound_report_from_json(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  BoundReport r;
  const auto& sched = j.at("schedule");
  r.steps = sched.at("steps").get<std::int64_t>();
  r.homogeneous = sched.at("homogeneous").get<bool>();
  if (r.homogeneous) {
    r.sigma = sched.at("sigma").get<double>();
    r.q = sched.at("q").get<double>();
    r.r = sched.at("r").get<double>();
  }
  r.neighboring_mode = sched.at("neighboring_mode").get<std::string>();
  r.provenance = sched.at("provenance").get<std::string>();
  const auto& tv = j.at("adv_tv");
  r.adv_tv.value = tv.at("value").get<double>();
  r.adv_tv.ci_halfwidth = tv.at("ci_halfwidth").get<double>();
  r.adv_tv.confidence = tv.at("confidence").get<double>();
  r.adv_tv.samples = tv.at("samples").get<std::int64_t>();
  r.adv_pinsker = j.at("adv_pinsker").get<double>();
  r.pinsker_alpha = j.at("pinsker_alpha").get<double>();
  r.pinsker_vacuous = j.at("pinsker_vacuous").get<bool>();
  r.adv_baseline_eps = j.at("adv_baseline_eps").get<double>();
  r.eps = j.at("eps").get<double>();
  r.delta = j.at("delta").get<double>();
  r.eps_alpha = j.at("eps_alpha").get<double>();
  r.vacuous = j.at("vacuous").get<bool>();
  r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

std::string bound_report_csv_header() {
  return "steps,sigma,q,r,neighboring_mode,adv_tv,adv_tv_ci,adv_pinsker,"
         "adv_baseline,eps,delta";
}

std::string to_csv_row(const BoundReport& r) {
  std::ostringstream out;
  out << r.steps << ',' << format_double(r.sigma) << ','
      << format_double(r.q) << ',' << format_double(r.r) << ','
      << r.neighboring_mode << ',' << format_double(r.adv_tv.value) << ','
      << format_double(r.adv_tv.ci_halfwidth) << ','
      << format_double(r.adv_pinsker) << ','
      << format_double(r.adv_baseline_eps) << ',' << format_double(r.eps)
      << ',' << format_double(r.delta);
  return out.str();
}

}  // namespace mia
