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
// Test-only oracles, deliberately independent of the library's adaptive
// quadrature: fixed-grid composite Simpson over a generous truncated
// domain.  Slow and simple on purpose.

#ifndef MIA_TESTS_ORACLES_H_
#define MIA_TESTS_ORACLES_H_

#include <cmath>
#include <functional>
#include <vector>

namespace mia_test {

struct Comp {
  double weight, mean, sigma;
};

// Any container of components with weight/mean/sigma fields works, so the
// library's own GaussianMixture can be passed directly.
template <class Mix>
double density(const Mix& mix, double x) {
  double d = 0.0;
  for (const auto& c : mix) {
    const double z = (x - c.mean) / c.sigma;
    d += c.weight * std::exp(-0.5 * z * z) /
         (c.sigma * std::sqrt(2.0 * 3.14159265358979323846));
  }
  return d;
}

inline double simpson(const std::function<double(double)>& f, double lo,
                      double hi, int n) {
  if (n % 2 != 0) ++n;
  const double h = (hi - lo) / n;
  double sum = f(lo) + f(hi);
  for (int i = 1; i < n; ++i) {
    sum += f(lo + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

// (1/2) integral |p - a q| by brute-force Simpson.
template <class MixP, class MixQ>
double tva_oracle(const MixP& p, const MixQ& q, double a,
                  int n = 2'000'000) {
  double lo = 1e300, hi = -1e300, smax = 0.0;
  const auto widen = [&](const auto& mix) {
    for (const auto& c : mix) {
      lo = std::min(lo, c.mean);
      hi = std::max(hi, c.mean);
      smax = std::max(smax, c.sigma);
    }
  };
  widen(p);
  widen(q);
  lo -= 12.0 * smax;
  hi += 12.0 * smax;
  const auto f = [&](double x) {
    return std::abs(density(p, x) - a * density(q, x));
  };
  return 0.5 * simpson(f, lo, hi, n);
}

// Renyi moment E_{x~q}[(p(x)/q(x))^alpha] by brute-force Simpson.
template <class MixP, class MixQ>
double renyi_moment_oracle(const MixP& p, const MixQ& q, double alpha,
                           int n = 2'000'000) {
  double lo = 1e300, hi = -1e300, smax = 0.0;
  const auto widen = [&](const auto& mix) {
    for (const auto& c : mix) {
      lo = std::min(lo, c.mean);
      hi = std::max(hi, c.mean);
      smax = std::max(smax, c.sigma);
    }
  };
  widen(p);
  widen(q);
  lo -= 14.0 * smax;
  hi += 14.0 * smax + alpha * smax;
  const auto f = [&](double x) {
    const double qd = density(q, x);
    if (qd <= 0.0) return 0.0;
    return qd * std::pow(density(p, x) / qd, alpha);
  };
  return simpson(f, lo, hi, n);
}

}  // namespace mia_test

#endif  // MIA_TESTS_ORACLES_H_
