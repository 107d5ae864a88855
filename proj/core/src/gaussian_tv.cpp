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

#include "mia/gaussian_tv.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mia/quadrature.hpp"

namespace mia {

double tv_gaussian_exact(double r, double sigma) {
  if (!(r >= 0.0)) {
    throw std::invalid_argument("separation r must be nonnegative");
  }
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("sigma must be positive");
  }
  return std::erf(r / (2.0 * std::numbers::sqrt2 * sigma));
}

namespace detail {

double tva_gaussian_closed_with_constant(const TvaQuery& query,
                                         double leading_constant) {
  const double r = query.r;
  const double sigma = query.sigma;
  const double a = query.a;
  if (!(r >= 0.0)) {
    throw std::invalid_argument("separation r must be nonnegative");
  }
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("sigma must be positive");
  }
  if (!(a > 0.0)) {
    throw std::invalid_argument("weight a must be positive");
  }
  if (a > 1.0) {
    // TV_a(P,Q) = a * TV_{1/a}(Q,P); separation and sigma are symmetric.
    return a * tva_gaussian_closed_with_constant({r, sigma, 1.0 / a},
                                                 leading_constant);
  }
  if (r == 0.0) {
    // Removable singularity: the distributions coincide and the integral
    // is the plain mass difference.
    return (1.0 - a) / 2.0;
  }
  const double log_a = std::log(a);
  const double denom = 2.0 * std::numbers::sqrt2 * sigma * r;
  const double upper = (r * r - 2.0 * sigma * sigma * log_a) / denom;
  const double lower = (-r * r - 2.0 * sigma * sigma * log_a) / denom;
  return leading_constant * (std::erf(upper) - a * std::erf(lower));
}

}  // namespace detail

double tva_gaussian_closed(const TvaQuery& query) {
  return detail::tva_gaussian_closed_with_constant(query, 0.5);
}

double check_subsampling_lemma(double r, double sigma, double q, double a) {
  if (!(q > 0.0 && q <= 1.0)) {
    throw std::invalid_argument("q must lie in (0,1]");
  }
  if (!(a > 0.0)) {
    throw std::invalid_argument("weight a must be positive");
  }
  if (!(r >= 0.0) || !(sigma > 0.0)) {
    throw std::invalid_argument("invalid (r, sigma)");
  }
  const GaussianMixture shifted{{1.0, r, sigma}};
  const GaussianMixture centered{{1.0, 0.0, sigma}};
  const GaussianMixture subsampled{{1.0 - q, 0.0, sigma}, {q, r, sigma}};

  const double lhs = tva_quadrature(subsampled, centered, a).value;
  const double reduced_weight = (a + q - 1.0) / q;
  const double rhs = q * tva_quadrature(shifted, centered, reduced_weight).value;
  return std::abs(lhs - rhs);
}

}  // namespace mia
