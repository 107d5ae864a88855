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

#ifndef MIA_ESTIMATE_H_
#define MIA_ESTIMATE_H_

#include <cmath>
#include <cstdint>

namespace mia {

// A Monte Carlo estimate of a [0,1]-bounded quantity together with a
// distribution-free two-sided confidence interval.
struct Estimate {
  double value = 0.0;
  double ci_halfwidth = 0.0;
  double confidence = 0.99;
  std::int64_t samples = 0;
};

// Two-sided Hoeffding half-width for the mean of `samples` i.i.d. values
// bounded in [0,1]:  sqrt(ln(2/(1-confidence)) / (2*samples)).
inline double hoeffding_halfwidth(std::int64_t samples, double confidence) {
  return std::sqrt(std::log(2.0 / (1.0 - confidence)) /
                   (2.0 * static_cast<double>(samples)));
}

}  // namespace mia

#endif  // MIA_ESTIMATE_H_
