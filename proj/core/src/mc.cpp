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

#include "mia/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "mia/rng.hpp"

namespace mia {
namespace {

constexpr std::uint64_t kForwardStream = 0x4d432d465744ULL;
constexpr std::uint64_t kReverseStream = 0x4d432d525645ULL;

void validate_config(const McConfig& cfg) {
  if (cfg.samples < 1) throw std::invalid_argument("samples must be positive");
  if (!(cfg.confidence > 0.0 && cfg.confidence < 1.0)) {
    throw std::invalid_argument("confidence must lie in (0,1)");
  }
  if (cfg.chunk_size < 1) {
    throw std::invalid_argument("chunk size must be positive");
  }
  if (cfg.threads < 0) throw std::invalid_argument("threads must be >= 0");
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Sum of per-coordinate terms log[(1-q_i) + q_i e^{u_i}] for one sample
// drawn inline; `sample_from_mixture` selects the world to sample from.
// Returns the per-sample integrand, already verified to lie in [0,1].
double one_sample(const CanonicalPair& pair, Rng& rng,
                  bool sample_from_mixture) {
  double log_ratio_sum = 0.0;
  for (const auto& d : pair.dims) {
    double t;
    if (sample_from_mixture) {
      const bool included = rng.uniform() < d.q;
      t = (included ? d.r : 0.0) + d.sigma * rng.gaussian();
    } else {
      t = d.sigma * rng.gaussian();
    }
    const double u = (d.r * t - 0.5 * d.r * d.r) / (d.sigma * d.sigma);
    log_ratio_sum += log_mixture_term(u, d.q);
  }
  // log_ratio_sum = log(X(t)/Y(t)) with X the mixture world.
  // Forward (t ~ X): max(0, 1 - Y/X) = max(0, -expm1(-S)).
  // Reverse (t ~ Y): max(0, 1 - X/Y) = max(0, -expm1(S)).
  const double s = sample_from_mixture ? -log_ratio_sum : log_ratio_sum;
  const double integrand = std::max(0.0, -std::expm1(s));
  return std::min(integrand, 1.0);
}

Estimate run_estimator(const MechanismSchedule& schedule, const McConfig& cfg,
                       bool forward) {
  validate_schedule(schedule);
  validate_config(cfg);
  const CanonicalPair pair = CanonicalPair::from_schedule(schedule);

  const std::int64_t n_chunks =
      (cfg.samples + cfg.chunk_size - 1) / cfg.chunk_size;
  std::vector<double> chunk_sums(static_cast<std::size_t>(n_chunks), 0.0);
  const std::uint64_t stream = forward ? kForwardStream : kReverseStream;

  std::atomic<std::int64_t> next_chunk{0};
  const auto worker = [&] {
    for (;;) {
      const std::int64_t k = next_chunk.fetch_add(1);
      if (k >= n_chunks) return;
      const std::int64_t begin = k * cfg.chunk_size;
      const std::int64_t end = std::min(begin + cfg.chunk_size, cfg.samples);
      Rng rng(derive_chunk_seed(cfg.seed, stream,
                                static_cast<std::uint64_t>(k)));
      double sum = 0.0;
      for (std::int64_t i = begin; i < end; ++i) {
        sum += one_sample(pair, rng, forward);
      }
      chunk_sums[static_cast<std::size_t>(k)] = sum;
    }
  };

  const int n_threads =
      static_cast<int>(std::min<std::int64_t>(resolve_threads(cfg.threads),
                                              n_chunks));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Reduction in chunk order keeps the result independent of thread count.
  double total = 0.0;
  for (const double s : chunk_sums) total += s;

  Estimate est;
  est.value = std::clamp(total / static_cast<double>(cfg.samples), 0.0, 1.0);
  est.confidence = cfg.confidence;
  est.samples = cfg.samples;
  est.ci_halfwidth = hoeffding_halfwidth(cfg.samples, cfg.confidence);
  return est;
}

}  // namespace

CanonicalPair CanonicalPair::from_schedule(const MechanismSchedule& schedule) {
  validate_schedule(schedule);
  return CanonicalPair{schedule.steps};
}

double log_mixture_term(double u, double q) {
  if (q <= 0.0) return 0.0;
  if (q >= 1.0) return u;
  if (u <= 0.0) {
    return std::log1p(q * std::expm1(u));
  }
  return u + std::log1p((1.0 - q) * std::expm1(-u));
}

double log_density_ratio(std::span<const double> t, const CanonicalPair& pair) {
  if (t.size() != pair.dims.size()) {
    throw std::invalid_argument("transcript length does not match schedule");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < pair.dims.size(); ++i) {
    const auto& d = pair.dims[i];
    const double u = (d.r * t[i] - 0.5 * d.r * d.r) / (d.sigma * d.sigma);
    sum += log_mixture_term(u, d.q);
  }
  return -sum;
}

Estimate mi_advantage_mc(const MechanismSchedule& schedule,
                         const McConfig& cfg) {
  return run_estimator(schedule, cfg, /*forward=*/true);
}

Estimate mi_advantage_mc_reverse(const MechanismSchedule& schedule,
                                 const McConfig& cfg) {
  return run_estimator(schedule, cfg, /*forward=*/false);
}

}  // namespace mia
