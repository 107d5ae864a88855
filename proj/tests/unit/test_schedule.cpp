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

#include "mia/schedule.hpp"

#include <doctest.h>

#include <string>

#include "mia/gaussian_tv.hpp"
#include "mia/mc.hpp"
#include "mia/rdp.hpp"

using namespace mia;

TEST_CASE("validate_schedule accepts a single legal step") {
  MechanismSchedule s{{{1.0, 1.0, 1.0}}};
  CHECK(&validate_schedule(s) == &s);
}

TEST_CASE("validate_schedule rejects non-positive sigma with step index") {
  MechanismSchedule s{{{1.0, 1.0, 1.0}, {0.0, 1.0, 1.0}}};
  try {
    validate_schedule(s);
    FAIL("expected ScheduleError");
  } catch (const ScheduleError& e) {
    CHECK(e.step_index() == 1);
    CHECK(std::string(e.what()).find("sigma must be positive") !=
          std::string::npos);
  }
}

TEST_CASE("validate_schedule rejects q out of range and negative r") {
  CHECK_THROWS_AS(validate_schedule({{{1.0, 1.5, 1.0}}}), ScheduleError);
  CHECK_THROWS_AS(validate_schedule({{{1.0, -0.1, 1.0}}}), ScheduleError);
  CHECK_THROWS_AS(validate_schedule({{{1.0, 0.5, -1.0}}}), ScheduleError);
}

TEST_CASE("validate_schedule rejects an empty schedule") {
  try {
    validate_schedule({});
    FAIL("expected ScheduleError");
  } catch (const ScheduleError& e) {
    CHECK(std::string(e.what()) == "schedule empty");
    CHECK(e.step_index() == -1);
  }
}

TEST_CASE("normalize_dpsgd maps (C, z, q, T) to T steps of {sigma=z, q, r=1}") {
  const auto s = normalize_dpsgd(10.0, 2.0, 0.02, 2500);
  REQUIRE(s.steps.size() == 2500);
  for (const auto& step : s.steps) {
    CHECK(step.sigma == 2.0);
    CHECK(step.q == 0.02);
    CHECK(step.r == 1.0);
  }

  const auto identity = normalize_dpsgd(1.0, 1.0, 1.0, 1);
  REQUIRE(identity.steps.size() == 1);
  CHECK(identity.steps[0] == ScheduleStep{1.0, 1.0, 1.0});

  const auto small = normalize_dpsgd(5.0, 0.5, 0.1, 10);
  REQUIRE(small.steps.size() == 10);
  CHECK(small.steps[3] == ScheduleStep{0.5, 0.1, 1.0});
}

TEST_CASE("normalize_dpsgd rejects nonpositive parameters") {
  CHECK_THROWS_AS(normalize_dpsgd(0.0, 1.0, 0.1, 1), ScheduleError);
  CHECK_THROWS_AS(normalize_dpsgd(1.0, 0.0, 0.1, 1), ScheduleError);
  CHECK_THROWS_AS(normalize_dpsgd(1.0, 1.0, 0.1, 0), ScheduleError);
}

TEST_CASE("homogeneous detection") {
  CHECK(MechanismSchedule{{{1, 1, 1}, {1, 1, 1}}}.homogeneous());
  CHECK_FALSE(MechanismSchedule{{{1, 1, 1}, {2, 1, 1}}}.homogeneous());
}

// All bounds depend on r/sigma only, so scaling (r, sigma) by a common
// factor must not change them.
TEST_CASE("scale invariance of closed forms and divergences") {
  const double scales[] = {0.5, 3.0, 10.0};
  for (double c : scales) {
    CHECK(tv_gaussian_exact(1.0, 1.0) ==
          doctest::Approx(tv_gaussian_exact(c, c)).epsilon(1e-14));
    CHECK(tva_gaussian_closed({1.0, 2.0, 0.7}) ==
          doctest::Approx(tva_gaussian_closed({c, 2.0 * c, 0.7}))
              .epsilon(1e-13));
    CHECK(rdp_gaussian(3.0, 1.0, 2.0) ==
          doctest::Approx(rdp_gaussian(3.0, c, 2.0 * c)).epsilon(1e-13));
    CHECK(kl_sampled_gaussian(0.3, 1.0, 1.5) ==
          doctest::Approx(kl_sampled_gaussian(0.3, c, 1.5 * c))
              .epsilon(1e-10));
  }
}

TEST_CASE("scale invariance of the MC estimator") {
  McConfig cfg{20000, 99, 0.99, 4096, 1};
  const auto base = mi_advantage_mc({{{1.0, 0.3, 1.0}}}, cfg);
  const auto scaled = mi_advantage_mc({{{5.0, 0.3, 5.0}}}, cfg);
  // Same RNG stream, same integrand up to rounding.
  CHECK(base.value == doctest::Approx(scaled.value).epsilon(1e-12));
}
