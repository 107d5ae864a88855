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

#include "mia/attack.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace mia {
namespace {

constexpr std::uint64_t kAttackStream = 0x4154544b53494dULL;

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

void sample_transcript(int b, const CanonicalPair& pair, Rng& rng,
                       std::vector<double>& out) {
  if (b != 0 && b != 1) throw std::invalid_argument("b must be 0 or 1");
  out.resize(pair.size());
  for (std::size_t i = 0; i < pair.dims.size(); ++i) {
    const auto& d = pair.dims[i];
    double mean = 0.0;
    if (b == 1) {
      // Bernoulli draw is consumed in both worlds so the two transcript
      // kinds stay on the same RNG cadence within a chunk.
      mean = rng.uniform() < d.q ? d.r : 0.0;
    } else {
      rng.uniform();
    }
    out[i] = mean + d.sigma * rng.gaussian();
  }
}

int bayes_guess(std::span<const double> t, const CanonicalPair& pair) {
  // log_density_ratio returns log(Y/X); the mixture world is the b=1
  // hypothesis, so guess 1 iff log(X/Y) >= 0, ties to 1.
  return log_density_ratio(t, pair) <= 0.0 ? 1 : 0;
}

AttackOutcome run_attack(const MechanismSchedule& schedule,
                         const AttackConfig& cfg) {
  validate_schedule(schedule);
  if (cfg.trials < 1) throw std::invalid_argument("trials must be positive");
  if (!(cfg.confidence > 0.0 && cfg.confidence < 1.0)) {
    throw std::invalid_argument("confidence must lie in (0,1)");
  }
  if (cfg.chunk_size < 1) {
    throw std::invalid_argument("chunk size must be positive");
  }
  const CanonicalPair pair = CanonicalPair::from_schedule(schedule);

  const std::int64_t n_chunks =
      (cfg.trials + cfg.chunk_size - 1) / cfg.chunk_size;
  std::vector<std::int64_t> chunk_correct(static_cast<std::size_t>(n_chunks),
                                          0);

  std::atomic<std::int64_t> next_chunk{0};
  const auto worker = [&] {
    std::vector<double> transcript;
    for (;;) {
      const std::int64_t k = next_chunk.fetch_add(1);
      if (k >= n_chunks) return;
      const std::int64_t begin = k * cfg.chunk_size;
      const std::int64_t end = std::min(begin + cfg.chunk_size, cfg.trials);
      Rng rng(derive_chunk_seed(cfg.seed, kAttackStream,
                                static_cast<std::uint64_t>(k)));
      std::int64_t correct = 0;
      for (std::int64_t i = begin; i < end; ++i) {
        const int b = static_cast<int>(rng.next_u64() & 1u);
        sample_transcript(b, pair, rng, transcript);
        if (bayes_guess(transcript, pair) == b) ++correct;
      }
      chunk_correct[static_cast<std::size_t>(k)] = correct;
    }
  };

  const int n_threads = static_cast<int>(
      std::min<std::int64_t>(resolve_threads(cfg.threads), n_chunks));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  AttackOutcome outcome;
  outcome.trials = cfg.trials;
  for (const auto c : chunk_correct) outcome.correct += c;
  outcome.empirical_advantage =
      2.0 * static_cast<double>(outcome.correct) /
          static_cast<double>(cfg.trials) -
      1.0;
  // Advantage is an affine map of the win-rate mean, so its half-width is
  // twice the Hoeffding half-width of the mean.
  outcome.ci_halfwidth = 2.0 * hoeffding_halfwidth(cfg.trials, cfg.confidence);
  outcome.confidence = cfg.confidence;
  return outcome;
}

}  // namespace mia
