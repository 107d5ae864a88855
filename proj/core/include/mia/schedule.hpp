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

#ifndef MIA_SCHEDULE_H_
#define MIA_SCHEDULE_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mia {

// One step of an adaptive composition of (sub)sampled Gaussian mechanisms.
// sigma is the noise standard deviation in units of the step's sensitivity,
// q the probability that any given sample is included, r the L2 sensitivity.
struct ScheduleStep {
  double sigma = 1.0;
  double q = 1.0;
  double r = 1.0;

  friend bool operator==(const ScheduleStep&, const ScheduleStep&) = default;
};

// Add/remove is the native analysis mode; replace-mode results are derived
// from it by doubling and clamping.
enum class NeighboringMode { kAddRemove, kReplace };

struct MechanismSchedule {
  std::vector<ScheduleStep> steps;
  NeighboringMode mode = NeighboringMode::kAddRemove;

  // True when every step carries the same (sigma, q, r).
  bool homogeneous() const;
};

class ScheduleError : public std::invalid_argument {
 public:
  explicit ScheduleError(const std::string& msg, int step_index = -1)
      : std::invalid_argument(msg), step_index_(step_index) {}

  // Index of the first violating step, or -1 when the schedule as a whole
  // is invalid (e.g. empty).
  int step_index() const { return step_index_; }

 private:
  int step_index_;
};

// Returns the schedule unchanged iff all type invariants hold; throws
// ScheduleError naming the first violating step otherwise.
const MechanismSchedule& validate_schedule(const MechanismSchedule& schedule);

// Maps DP-SGD parameters (clipping norm C, noise multiplier z, rate q,
// step count T) to the sensitivity-normalized schedule: T identical steps
// with r = 1 and sigma = z.  Every bound downstream depends on r/sigma
// only, and DP-SGD noise std C*z with sensitivity C has r/sigma = 1/z.
MechanismSchedule normalize_dpsgd(double clipping, double noise_multiplier,
                                  double q, std::int64_t steps);

std::string to_string(NeighboringMode mode);
NeighboringMode neighboring_mode_from_string(const std::string& s);

}  // namespace mia

#endif  // MIA_SCHEDULE_H_
