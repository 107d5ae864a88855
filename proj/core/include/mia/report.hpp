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

#ifndef MIA_REPORT_H_
#define MIA_REPORT_H_

#include <cstdint>
#include <string>

#include "mia/estimate.hpp"
#include "mia/mc.hpp"
#include "mia/rdp.hpp"
#include "mia/schedule.hpp"

namespace mia {

// All advantage bounds for one schedule.  Values are already adjusted for
// the schedule's neighboring mode: replace-mode fields equal
// min(1, 2 * add_remove value), with `vacuous` set when clamping occurred.
struct BoundReport {
  std::int64_t steps = 0;
  bool homogeneous = true;
  double sigma = 0.0;  // meaningful only when homogeneous
  double q = 0.0;
  double r = 0.0;
  std::string neighboring_mode = "add_remove";
  // "theorem" for constant-parameter schedules, "contribution-claim" for
  // heterogeneous ones (the composition theorems are stated for constant
  // parameters).
  std::string provenance = "theorem";

  Estimate adv_tv;
  double adv_pinsker = 0.0;
  double pinsker_alpha = 1.0;
  bool pinsker_vacuous = false;
  double adv_baseline_eps = 0.0;
  double eps = 0.0;
  double delta = 1e-5;
  double eps_alpha = 0.0;
  bool vacuous = false;  // any advantage field clamped at 1 by mode doubling
  std::uint64_t seed = 0;
};

// Runs the MC estimator, the Pinsker bound (best order on the default
// grid), the RDP conversion and the baseline, and applies the neighboring
// mode adjustment.
BoundReport compute_bound_report(const MechanismSchedule& schedule,
                                 const McConfig& cfg, double delta);

// %.9g, the fixed number format of every serialized report.
std::string format_double(double v);

// Stable field order, numbers at 9 significant digits.  Byte-identical
// across runs with the same inputs.
std::string to_json(const BoundReport& report);
BoundReport bound_report_from_json(const std::string& json_text);

std::string bound_report_csv_header();
std::string to_csv_row(const BoundReport& report);

}  // namespace mia

#endif  // MIA_REPORT_H_
