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

#ifndef MIA_ATTACK_H_
#define MIA_ATTACK_H_

#include <cstdint>
#include <span>
#include <vector>

#include "mia/mc.hpp"
#include "mia/rng.hpp"
#include "mia/schedule.hpp"

namespace mia {

struct AttackOutcome {
  std::int64_t trials = 0;
  std::int64_t correct = 0;
  double empirical_advantage = 0.0;  // 2*correct/trials - 1
  double ci_halfwidth = 0.0;         // Hoeffding on the advantage scale
  double confidence = 0.99;
};

// Draws one transcript of the reduced security game: b = 0 gives centered
// Gaussians, b = 1 gives Bernoulli(q_i)-shifted Gaussians per coordinate.
void sample_transcript(int b, const CanonicalPair& pair, Rng& rng,
                       std::vector<double>& out);

// Bayes-optimal guess: 1 iff log(X(t)/Y(t)) >= 0 with X the b=1 mixture
// world; the measure-zero tie goes to 1 for determinism.
int bayes_guess(std::span<const double> t, const CanonicalPair& pair);

struct AttackConfig {
  std::int64_t trials = 100'000;
  std::uint64_t seed = 0;
  double confidence = 0.99;
  std::int64_t chunk_size = 16384;
  int threads = 0;
};

// Runs `trials` independent games with b ~ uniform{0,1} and the Bayes
// adversary; deterministic under fixed seed for any worker count.
AttackOutcome run_attack(const MechanismSchedule& schedule,
                         const AttackConfig& cfg);

}  // namespace mia

#endif  // MIA_ATTACK_H_
