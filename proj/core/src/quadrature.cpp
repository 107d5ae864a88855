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

#include "mia/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace mia {
namespace {

// Gauss-Kronrod (G7, K15) nodes and weights on [-1, 1].
constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {0.129484966168870, 0.279705391489277,
                                     0.381830050505119, 0.417959183673469};

struct PanelResult {
  double kronrod;
  double error;
};

PanelResult gk15(const std::function<double(double)>& f, double lo,
                 double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(center - half * kKronrodNodes[i]);
    fv[14 - i] = f(center + half * kKronrodNodes[i]);
  }
  fv[7] = f(center);

  double kronrod = kKronrodWeights[7] * fv[7];
  for (int i = 0; i < 7; ++i) {
    kronrod += kKronrodWeights[i] * (fv[i] + fv[14 - i]);
  }
  // Gauss nodes are the odd-indexed Kronrod nodes plus the center.
  double gauss = kGaussWeights[3] * fv[7];
  for (int i = 0; i < 3; ++i) {
    gauss += kGaussWeights[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  }
  kronrod *= half;
  gauss *= half;
  const double diff = std::abs(kronrod - gauss);
  // Standard conservative rescaling of the G-K difference.
  const double error = diff == 0.0 ? 0.0 : std::min(diff, std::pow(200.0 * diff, 1.5));
  return {kronrod, error};
}

}  // namespace

void validate_mixture(const GaussianMixture& mix) {
  if (mix.empty()) {
    throw std::invalid_argument("mixture has no components");
  }
  double total = 0.0;
  for (const auto& c : mix) {
    if (!(c.sigma > 0.0)) {
      throw std::invalid_argument("mixture component sigma must be positive");
    }
    if (c.weight < 0.0) {
      throw std::invalid_argument("mixture component weight must be nonnegative");
    }
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("mixture weights must sum to 1");
  }
}

double mixture_density(const GaussianMixture& mix, double x) {
  double density = 0.0;
  for (const auto& c : mix) {
    const double z = (x - c.mean) / c.sigma;
    density += c.weight *
               std::exp(-0.5 * z * z) /
               (std::numbers::sqrt2 * std::sqrt(std::numbers::pi) * c.sigma);
  }
  return density;
}

QuadResult integrate(const std::function<double(double)>& f, double lo,
                     double hi, double abs_tol) {
  if (!(hi > lo)) return {0.0, 0.0};

  struct Segment {
    double lo, hi;
    int depth;
  };
  std::vector<Segment> stack{{lo, hi, 0}};
  constexpr int kMaxDepth = 40;

  QuadResult result;
  while (!stack.empty()) {
    const Segment seg = stack.back();
    stack.pop_back();
    const auto panel = gk15(f, seg.lo, seg.hi);
    const double local_tol = abs_tol * (seg.hi - seg.lo) / (hi - lo);
    if (panel.error <= std::max(local_tol, 1e-300) || seg.depth >= kMaxDepth) {
      result.value += panel.kronrod;
      result.abs_error += panel.error;
    } else {
      const double mid = 0.5 * (seg.lo + seg.hi);
      stack.push_back({seg.lo, mid, seg.depth + 1});
      stack.push_back({mid, seg.hi, seg.depth + 1});
    }
  }
  return result;
}

QuadResult tva_quadrature(const GaussianMixture& p, const GaussianMixture& q,
                          double a) {
  validate_mixture(p);
  validate_mixture(q);

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  double sigma_max = 0.0;
  for (const auto* mix : {&p, &q}) {
    for (const auto& c : *mix) {
      lo = std::min(lo, c.mean);
      hi = std::max(hi, c.mean);
      sigma_max = std::max(sigma_max, c.sigma);
    }
  }
  lo -= 10.0 * sigma_max;
  hi += 10.0 * sigma_max;

  const auto diff = [&](double x) {
    return mixture_density(p, x) - a * mixture_density(q, x);
  };

  // Locate the sign changes of p - a*q so each panel integrates a smooth
  // function; an absolute-value kink inside a panel stalls the refinement.
  std::vector<double> cuts{lo};
  constexpr int kScan = 4096;
  double prev_x = lo;
  double prev_f = diff(lo);
  for (int i = 1; i <= kScan; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / kScan;
    const double fx = diff(x);
    if ((prev_f < 0.0) != (fx < 0.0)) {
      double left = prev_x, right = x;
      double f_left = prev_f;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (left + right);
        const double f_mid = diff(mid);
        if ((f_left < 0.0) != (f_mid < 0.0)) {
          right = mid;
        } else {
          left = mid;
          f_left = f_mid;
        }
      }
      cuts.push_back(0.5 * (left + right));
    }
    prev_x = x;
    prev_f = fx;
  }
  cuts.push_back(hi);

  const auto abs_diff = [&](double x) { return std::abs(diff(x)); };
  QuadResult total;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const auto piece = integrate(abs_diff, cuts[i], cuts[i + 1], 1e-13);
    total.value += piece.value;
    total.abs_error += piece.abs_error;
  }
  total.value *= 0.5;
  total.abs_error *= 0.5;
  return total;
}

}  // namespace mia
