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

#include "mia/schedule.hpp"

#include <cmath>

namespace mia {

bool MechanismSchedule::homogeneous() const {
  for (const auto& s : steps) {
    if (!(s == steps.front())) return false;
  }
  return true;
}

const MechanismSchedule& validate_schedule(const MechanismSchedule& schedule) {
  if (schedule.steps.empty()) {
    throw ScheduleError("schedule empty");
  }
  for (std::size_t i = 0; i < schedule.steps.size(); ++i) {
    const auto& s = schedule.steps[i];
    const int idx = static_cast<int>(i);
    if (!(s.sigma > 0.0) || !std::isfinite(s.sigma)) {
      throw ScheduleError(
          "sigma must be positive at step " + std::to_string(i), idx);
    }
    if (!(s.q >= 0.0 && s.q <= 1.0)) {
      throw ScheduleError("q must lie in [0,1] at step " + std::to_string(i),
                          idx);
    }
    if (!(s.r >= 0.0) || !std::isfinite(s.r)) {
      throw ScheduleError(
          "r must be nonnegative at step " + std::to_string(i), idx);
    }
  }
  return schedule;
}

MechanismSchedule normalize_dpsgd(double clipping, double noise_multiplier,
                                  double q, std::int64_t steps) {
  if (!(clipping > 0.0)) {
    throw ScheduleError("clipping must be positive");
  }
  if (!(noise_multiplier > 0.0)) {
    throw ScheduleError("noise multiplier must be positive");
  }
  if (!(q >= 0.0 && q <= 1.0)) {
    throw ScheduleError("q must lie in [0,1]");
  }
  if (steps < 1) {
    throw ScheduleError("step count must be positive");
  }
  MechanismSchedule schedule;
  schedule.steps.assign(static_cast<std::size_t>(steps),
                        ScheduleStep{.sigma = noise_multiplier, .q = q, .r = 1.0});
  return schedule;
}

std::string to_string(NeighboringMode mode) {
  return mode == NeighboringMode::kAddRemove ? "add_remove" : "replace";
}

NeighboringMode neighboring_mode_from_string(const std::string& s) {
  if (s == "add_remove") return NeighboringMode::kAddRemove;
  if (s == "replace") return NeighboringMode::kReplace;
  throw ScheduleError("unknown neighboring mode: " + s);
}

}  // namespace mia
