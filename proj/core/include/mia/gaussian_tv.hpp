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

#ifndef MIA_GAUSSIAN_TV_H_
#define MIA_GAUSSIAN_TV_H_

namespace mia {

struct Gaussian1D {
  double mean = 0.0;
  double sigma = 1.0;
};

// Weighted total variation query between N(0, sigma^2) and N(r, sigma^2):
// (1/2) * integral |p - a*q|.
struct TvaQuery {
  double r = 0.0;
  double sigma = 1.0;
  double a = 1.0;
};

// Exact TV between two 1-d Gaussians with equal sigma and separation r:
// erf(r / (2*sqrt(2)*sigma)).
double tv_gaussian_exact(double r, double sigma);

// Closed-form weighted TV between N(0,sigma^2) and N(r,sigma^2):
//   (1/2) * [ erf((r^2 - 2 sigma^2 ln a)/(2 sqrt(2) sigma r))
//             - a * erf((-r^2 - 2 sigma^2 ln a)/(2 sqrt(2) sigma r)) ]
// for a in (0,1]; a > 1 via the reflection TV_a(P,Q) = a * TV_{1/a}(Q,P);
// r = 0 is a removable singularity with value |1 - a| / 2.
// The leading constant is validated against tva_quadrature in the tests.
double tva_gaussian_closed(const TvaQuery& query);

// Evaluates both sides of the subsampling identity
//   TV_a((1-q)Y + qX, Y) = q * TV_{(a+q-1)/q}(X, Y)
// with X = N(r, sigma^2), Y = N(0, sigma^2) by quadrature and returns the
// absolute discrepancy.  Accepts any q in (0,1] and any a > 0; the reduced
// weight (a+q-1)/q may be negative, the identity is algebraic and still
// holds.
double check_subsampling_lemma(double r, double sigma, double q, double a);

namespace detail {
// Same closed form with an explicit leading constant (canonical: 0.5).
// Exists for the lemma-check negative control.
double tva_gaussian_closed_with_constant(const TvaQuery& query,
                                         double leading_constant);
}  // namespace detail

}  // namespace mia

#endif  // MIA_GAUSSIAN_TV_H_
