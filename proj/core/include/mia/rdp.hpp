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

#ifndef MIA_RDP_H_
#define MIA_RDP_H_

#include <utility>
#include <vector>

#include "mia/schedule.hpp"

namespace mia {

// Renyi divergence curve eps(alpha) of a schedule; entries may be +inf
// when the divergence overflows (flagged, never silently dropped).
struct RdpCurve {
  std::vector<double> alphas;
  std::vector<double> eps;
};

struct EpsDelta {
  double eps = 0.0;
  double delta = 1e-5;
};

// {1} u {1.25, 1.5, 1.75} u {2, 3, ..., 256}.
std::vector<double> default_alpha_grid();

// Renyi divergence of order alpha >= 1 between two Gaussians with equal
// sigma and separation r: alpha * r^2 / (2 sigma^2).  alpha = 1 is the KL
// limit.
double rdp_gaussian(double alpha, double r, double sigma);

// Integer-order Renyi divergence of the subsampled Gaussian pair
// (mixture vs centered Gaussian), via the binomial expansion
//   (1/(alpha-1)) log sum_k C(alpha,k) (1-q)^(alpha-k) q^k
//                            exp(k(k-1) r^2/(2 sigma^2)),
// evaluated with log-sum-exp.
double rdp_sampled_gaussian(int alpha, double q, double r, double sigma);

// Fractional orders: quadrature of the Renyi integral between the mixture
// and the centered Gaussian.
double rdp_sampled_gaussian_quadrature(double alpha, double q, double r,
                                       double sigma);

// KL(N(0,sigma^2) || (1-q) N(0,sigma^2) + q N(r,sigma^2)) by quadrature.
double kl_sampled_gaussian(double q, double r, double sigma);

// Reverse direction KL(mixture || N(0,sigma^2)).
double kl_sampled_gaussian_reverse(double q, double r, double sigma);

// Per-step divergence at order alpha, maximum over both directions.  The
// max of two functions nondecreasing in alpha stays nondecreasing, which
// preserves the order-monotonicity of the Pinsker bound.
double step_divergence(const ScheduleStep& step, double alpha);

// Full curve for a schedule: per-step divergences summed over steps at
// each grid order (adaptive-composition additivity).
RdpCurve rdp_curve(const MechanismSchedule& schedule,
                   const std::vector<double>& alphas);

struct PinskerBound {
  double advantage = 0.0;  // clamped to <= 1
  bool vacuous = false;    // true when the unclamped bound exceeded 1
  double unclamped = 0.0;
};

// min(1, sqrt(sum_i d_i / 2)) with d_i the per-step divergence at `alpha`;
// alpha = 1 uses KL, alpha > 1 the Renyi curve.
PinskerBound pinsker_advantage(const MechanismSchedule& schedule, double alpha);

struct EpsResult {
  EpsDelta ed;
  double best_alpha = 0.0;  // grid order attaining the minimum
};

// RDP-to-DP conversion, the tight variant used by current accountants:
//   eps = min over alpha > 1 of
//     [eps(alpha) + log((alpha-1)/alpha) - (log delta + log alpha)/(alpha-1)]
// clamped at 0.  This is uniformly at most the classical
// eps(alpha) + log(1/delta)/(alpha-1).
EpsResult eps_from_rdp(const RdpCurve& curve, double delta);

// Classical DP-to-MI baseline: attack accuracy <= (1-delta)*sigmoid(eps)+delta,
// returned as an advantage min(1, 2*Acc - 1).
double baseline_advantage_from_eps(const EpsDelta& ed);

// MI attack precision is bounded within (sigmoid(-eps), sigmoid(eps)).
std::pair<double, double> precision_bounds(double eps);

}  // namespace mia

#endif  // MIA_RDP_H_
