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

#include "mia/rdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "mia/mc.hpp"
#include "mia/quadrature.hpp"

namespace mia {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// log of integral of g0(x) * w(x)^beta with
// w(x) = (1-q) + q e^{(r x - r^2/2)/sigma^2}, the shared kernel of every
// divergence between the subsampled pair.  The integrand is rescaled by
// its peak before quadrature: for large |beta| its raw values span
// hundreds of orders of magnitude and an absolute tolerance would force
// the adaptive rule into bottomless subdivision.
double log_mixture_power_integral(double beta, double q, double r,
                                  double sigma) {
  const double log_norm =
      -std::log(sigma * std::numbers::sqrt2 * std::sqrt(std::numbers::pi));
  const auto log_f = [&](double x) {
    const double u = (r * x - 0.5 * r * r) / (sigma * sigma);
    return log_norm - 0.5 * x * x / (sigma * sigma) +
           beta * log_mixture_term(u, q);
  };
  const double lo = std::min(0.0, beta * r) - 12.0 * sigma;
  const double hi = std::max({r, beta * r}) + 12.0 * sigma;
  // The exponent is unimodal in x, so a dense scan finds the peak.
  constexpr int kScan = 2048;
  double peak = -kInf;
  for (int i = 0; i <= kScan; ++i) {
    peak = std::max(peak, log_f(lo + (hi - lo) * i / kScan));
  }
  if (!std::isfinite(peak)) return kInf;
  const auto integrand = [&](double x) { return std::exp(log_f(x) - peak); };
  return peak + std::log(integrate(integrand, lo, hi, 1e-13).value);
}

double renyi_from_log_integral(double alpha, double log_moment) {
  if (std::isnan(log_moment) || log_moment == kInf) return kInf;
  return std::max(0.0, log_moment / (alpha - 1.0));
}

// KL in either direction via the same kernel:
//   forward  KL(g0 || mix)  = -int g0 log w
//   reverse  KL(mix || g0)  =  int g0 w log w
double kl_quadrature(double q, double r, double sigma, bool reverse) {
  const double log_norm =
      -std::log(sigma * std::numbers::sqrt2 * std::sqrt(std::numbers::pi));
  const auto integrand = [&](double x) {
    const double u = (r * x - 0.5 * r * r) / (sigma * sigma);
    const double log_w = log_mixture_term(u, q);
    const double g0 =
        std::exp(log_norm - 0.5 * x * x / (sigma * sigma));
    return reverse ? g0 * std::exp(log_w) * log_w : -g0 * log_w;
  };
  const double lo = std::min(0.0, -r) - 12.0 * sigma;
  const double hi = std::max(0.0, r) + 12.0 * sigma;
  return std::max(0.0, integrate(integrand, lo, hi, 1e-13).value);
}

void check_sampled_params(double q, double r, double sigma) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("q must lie in [0,1]");
  }
  if (!(r >= 0.0)) throw std::invalid_argument("r must be nonnegative");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
}

}  // namespace

std::vector<double> default_alpha_grid() {
  std::vector<double> grid{1.0, 1.25, 1.5, 1.75};
  for (int a = 2; a <= 256; ++a) grid.push_back(static_cast<double>(a));
  return grid;
}

double rdp_gaussian(double alpha, double r, double sigma) {
  if (!(alpha >= 1.0)) throw std::invalid_argument("alpha must be >= 1");
  if (!(r >= 0.0)) throw std::invalid_argument("r must be nonnegative");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  return alpha * r * r / (2.0 * sigma * sigma);
}

double rdp_sampled_gaussian(int alpha, double q, double r, double sigma) {
  if (alpha < 2) throw std::invalid_argument("integer-order path needs alpha >= 2");
  check_sampled_params(q, r, sigma);
  if (q == 0.0 || r == 0.0) return 0.0;
  if (q == 1.0) return rdp_gaussian(alpha, r, sigma);

  const double log_q = std::log(q);
  const double log_1mq = std::log1p(-q);
  const double scale = r * r / (2.0 * sigma * sigma);
  double max_term = -kInf;
  std::vector<double> terms(static_cast<std::size_t>(alpha) + 1);
  for (int k = 0; k <= alpha; ++k) {
    const double log_binom = std::lgamma(alpha + 1.0) - std::lgamma(k + 1.0) -
                             std::lgamma(alpha - k + 1.0);
    const double t = log_binom + (alpha - k) * log_1mq + k * log_q +
                     static_cast<double>(k) * (k - 1.0) * scale;
    terms[static_cast<std::size_t>(k)] = t;
    max_term = std::max(max_term, t);
  }
  double sum = 0.0;
  for (const double t : terms) sum += std::exp(t - max_term);
  const double log_moment = max_term + std::log(sum);
  return std::max(0.0, log_moment / (alpha - 1.0));
}

double rdp_sampled_gaussian_quadrature(double alpha, double q, double r,
                                       double sigma) {
  if (!(alpha > 1.0)) throw std::invalid_argument("alpha must be > 1");
  check_sampled_params(q, r, sigma);
  if (q == 0.0 || r == 0.0) return 0.0;
  if (q == 1.0) return rdp_gaussian(alpha, r, sigma);
  return renyi_from_log_integral(
      alpha, log_mixture_power_integral(alpha, q, r, sigma));
}

double kl_sampled_gaussian(double q, double r, double sigma) {
  check_sampled_params(q, r, sigma);
  if (q == 0.0 || r == 0.0) return 0.0;
  if (q == 1.0) return r * r / (2.0 * sigma * sigma);
  return kl_quadrature(q, r, sigma, /*reverse=*/false);
}

double kl_sampled_gaussian_reverse(double q, double r, double sigma) {
  check_sampled_params(q, r, sigma);
  if (q == 0.0 || r == 0.0) return 0.0;
  if (q == 1.0) return r * r / (2.0 * sigma * sigma);
  return kl_quadrature(q, r, sigma, /*reverse=*/true);
}

double step_divergence(const ScheduleStep& step, double alpha) {
  if (!(alpha >= 1.0)) throw std::invalid_argument("alpha must be >= 1");
  const double q = step.q, r = step.r, sigma = step.sigma;
  check_sampled_params(q, r, sigma);
  if (q == 0.0 || r == 0.0) return 0.0;
  if (q == 1.0) return rdp_gaussian(alpha, r, sigma);
  if (alpha == 1.0) {
    return std::max(kl_sampled_gaussian(q, r, sigma),
                    kl_sampled_gaussian_reverse(q, r, sigma));
  }
  double forward;
  const double rounded = std::round(alpha);
  if (rounded == alpha && alpha >= 2.0) {
    forward = rdp_sampled_gaussian(static_cast<int>(rounded), q, r, sigma);
  } else {
    forward = rdp_sampled_gaussian_quadrature(alpha, q, r, sigma);
  }
  const double reverse = renyi_from_log_integral(
      alpha, log_mixture_power_integral(1.0 - alpha, q, r, sigma));
  return std::max(forward, reverse);
}

RdpCurve rdp_curve(const MechanismSchedule& schedule,
                   const std::vector<double>& alphas) {
  validate_schedule(schedule);
  std::map<std::tuple<double, double, double>, std::int64_t> unique_steps;
  for (const auto& s : schedule.steps) {
    ++unique_steps[{s.sigma, s.q, s.r}];
  }
  RdpCurve curve;
  curve.alphas = alphas;
  curve.eps.reserve(alphas.size());
  for (const double alpha : alphas) {
    double total = 0.0;
    for (const auto& [key, count] : unique_steps) {
      const auto& [sigma, q, r] = key;
      total += static_cast<double>(count) *
               step_divergence({sigma, q, r}, alpha);
    }
    curve.eps.push_back(total);
  }
  return curve;
}

PinskerBound pinsker_advantage(const MechanismSchedule& schedule,
                               double alpha) {
  if (!(alpha >= 1.0)) throw std::invalid_argument("alpha must be >= 1");
  const RdpCurve curve = rdp_curve(schedule, {alpha});
  PinskerBound bound;
  bound.unclamped = std::sqrt(curve.eps.front() / 2.0);
  bound.vacuous = bound.unclamped > 1.0;
  bound.advantage = std::min(1.0, bound.unclamped);
  return bound;
}

EpsResult eps_from_rdp(const RdpCurve& curve, double delta) {
  if (curve.alphas.empty() || curve.alphas.size() != curve.eps.size()) {
    throw std::invalid_argument("empty or inconsistent RDP curve");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0,1)");
  }
  const double log_delta = std::log(delta);
  double best = kInf;
  double best_alpha = 0.0;
  for (std::size_t i = 0; i < curve.alphas.size(); ++i) {
    const double alpha = curve.alphas[i];
    if (!(alpha > 1.0) || !std::isfinite(curve.eps[i])) continue;
    const double candidate = curve.eps[i] +
                             std::log((alpha - 1.0) / alpha) -
                             (log_delta + std::log(alpha)) / (alpha - 1.0);
    if (candidate < best) {
      best = candidate;
      best_alpha = alpha;
    }
  }
  if (!std::isfinite(best)) {
    throw std::invalid_argument("RDP curve has no usable order alpha > 1");
  }
  return {{std::max(0.0, best), delta}, best_alpha};
}

double baseline_advantage_from_eps(const EpsDelta& ed) {
  if (!(ed.eps >= 0.0)) throw std::invalid_argument("eps must be nonnegative");
  if (!(ed.delta >= 0.0 && ed.delta < 1.0)) {
    throw std::invalid_argument("delta must lie in [0,1)");
  }
  const double accuracy = (1.0 - ed.delta) * sigmoid(ed.eps) + ed.delta;
  return std::min(1.0, 2.0 * accuracy - 1.0);
}

std::pair<double, double> precision_bounds(double eps) {
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be nonnegative");
  return {sigmoid(-eps), sigmoid(eps)};
}

}  // namespace mia
