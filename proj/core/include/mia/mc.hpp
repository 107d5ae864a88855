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

#ifndef MIA_MC_H_
#define MIA_MC_H_

#include <cstdint>
#include <span>
#include <vector>

#include "mia/estimate.hpp"
#include "mia/schedule.hpp"

namespace mia {

// The reduced pair the composition theorems bound the transcript by:
// per coordinate i, world X (b=1) has density
// (1-q_i) N(0, sigma_i^2) + q_i N(r_i, sigma_i^2) and world Y (b=0) has
// density N(0, sigma_i^2).  Coordinates are independent.
struct CanonicalPair {
  std::vector<ScheduleStep> dims;

  static CanonicalPair from_schedule(const MechanismSchedule& schedule);
  std::size_t size() const { return dims.size(); }
};

struct McConfig {
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  double confidence = 0.99;
  std::int64_t chunk_size = 16384;
  // Worker count; 0 means hardware concurrency.  Results are independent
  // of this value by construction.
  int threads = 0;
};

// log(Y(t)/X(t)) = -sum_i log[(1-q_i) + q_i exp((r_i t_i - r_i^2/2)/sigma_i^2)],
// evaluated coordinate-wise in log space.
double log_density_ratio(std::span<const double> t, const CanonicalPair& pair);

// Per-coordinate term log[(1-q) + q e^u], overflow-safe on both tails.
double log_mixture_term(double u, double q);

// Monte Carlo estimate of TV(X, Y): samples t ~ X and averages
// max(0, 1 - Y(t)/X(t)).  Hoeffding CI, deterministic chunked reduction.
Estimate mi_advantage_mc(const MechanismSchedule& schedule,
                         const McConfig& cfg);

// Same estimator with the roles of X and Y exchanged; agrees with the
// forward estimate in expectation by symmetry of TV.
Estimate mi_advantage_mc_reverse(const MechanismSchedule& schedule,
                                 const McConfig& cfg);

}  // namespace mia

#endif  // MIA_MC_H_
