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

#include <doctest.h>

#include <cmath>

#include "mia/quadrature.hpp"
#include "oracles.hpp"

using namespace mia;

namespace {
const GaussianMixture kStd{{1.0, 0.0, 1.0}};
GaussianMixture shifted(double r, double sigma = 1.0) {
  return {{1.0, r, sigma}};
}
}  // namespace

TEST_CASE("tv_gaussian_exact matches the brute-force oracle") {
  CHECK(tv_gaussian_exact(0.0, 1.0) == 0.0);
  // Frozen from the Simpson oracle; equals erf(1/(2 sqrt 2)).
  CHECK(tv_gaussian_exact(1.0, 1.0) ==
        doctest::Approx(0.3829249225480262).epsilon(1e-12));
  // Equals erf(1/sqrt 2).
  CHECK(tv_gaussian_exact(2.0, 1.0) ==
        doctest::Approx(0.6826894921370859).epsilon(1e-12));

  CHECK(tv_gaussian_exact(1.0, 1.0) ==
        doctest::Approx(mia_test::tva_oracle(shifted(1.0), kStd, 1.0))
            .epsilon(1e-8));
  CHECK(tv_gaussian_exact(2.0, 1.0) ==
        doctest::Approx(mia_test::tva_oracle(shifted(2.0), kStd, 1.0))
            .epsilon(1e-8));
}

TEST_CASE("tv_gaussian_exact rejects invalid parameters") {
  CHECK_THROWS(tv_gaussian_exact(-1.0, 1.0));
  CHECK_THROWS(tv_gaussian_exact(1.0, 0.0));
}

TEST_CASE("tva_gaussian_closed: a=1 specialization validates the constant") {
  CHECK(tva_gaussian_closed({1.0, 1.0, 1.0}) ==
        doctest::Approx(0.3829249225480262).epsilon(1e-12));
  for (double r : {0.25, 1.0, 3.0}) {
    for (double sigma : {0.5, 2.0}) {
      CHECK(tva_gaussian_closed({r, sigma, 1.0}) ==
            doctest::Approx(tv_gaussian_exact(r, sigma)).epsilon(1e-13));
    }
  }
}

TEST_CASE("tva_gaussian_closed agrees with quadrature for a < 1") {
  const double v = tva_gaussian_closed({1.0, 1.0, 0.5});
  CHECK(v == doctest::Approx(tva_quadrature(shifted(1.0), kStd, 0.5).value)
                 .epsilon(1e-9));
  CHECK(std::abs(v - mia_test::tva_oracle(shifted(1.0), kStd, 0.5)) < 1e-8);
}

TEST_CASE("tva_gaussian_closed r=0 singularity branch") {
  CHECK(tva_gaussian_closed({0.0, 1.0, 0.5}) == doctest::Approx(0.25));
  CHECK(tva_gaussian_closed({0.0, 2.0, 1.0}) == doctest::Approx(0.0));
  // Continuity at the branch.
  CHECK(tva_gaussian_closed({1e-9, 1.0, 0.5}) ==
        doctest::Approx(0.25).epsilon(1e-6));
}

TEST_CASE("tva_gaussian_closed a>1 reflection identity") {
  for (double a : {1.5, 2.0, 4.0}) {
    const double direct = tva_gaussian_closed({1.0, 1.0, a});
    const GaussianMixture p = shifted(1.0);
    CHECK(direct ==
          doctest::Approx(tva_quadrature(p, kStd, a).value).epsilon(1e-9));
  }
}

TEST_CASE("closed form vs quadrature on the full grid") {
  for (double a = 0.1; a <= 1.001; a += 0.1) {
    for (double r = 0.25; r <= 4.001; r += 0.75) {
      for (double sigma : {0.5, 1.0, 2.0}) {
        const double closed = tva_gaussian_closed({r, sigma, a});
        const double quad = tva_quadrature(shifted(r, sigma),
                                           {{1.0, 0.0, sigma}}, a)
                                .value;
        CHECK(std::abs(closed - quad) <= 1e-8);
      }
    }
  }
}

TEST_CASE("monotonicity in r for fixed sigma and a") {
  for (double sigma : {0.5, 1.0, 2.0}) {
    for (double a : {0.1, 0.5, 0.9, 1.0}) {
      double prev = -1.0;
      for (int i = 1; i <= 50; ++i) {
        const double v = tva_gaussian_closed({0.1 * i, sigma, a});
        CHECK(v >= prev - 1e-12);
        prev = v;
      }
    }
  }
}

TEST_CASE("outputs at a <= 1 lie in [0,1]") {
  for (double a : {0.05, 0.3, 1.0}) {
    for (double r : {0.0, 0.7, 5.0}) {
      const double v = tva_gaussian_closed({r, 1.3, a});
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("tva_quadrature basics") {
  CHECK(tva_quadrature(kStd, kStd, 1.0).value == doctest::Approx(0.0));
  const auto res = tva_quadrature(shifted(1.0), kStd, 1.0);
  CHECK(res.value == doctest::Approx(0.3829249225480262).epsilon(1e-10));
  CHECK(res.abs_error < 1e-10);
}

TEST_CASE("tva_quadrature: mixture peeling identity at a=1") {
  // (0.9 N(0,1) + 0.1 N(1,1)) vs N(0,1) at a=1 equals 0.1 * TV(N(0,1),N(1,1)).
  const GaussianMixture mix{{0.9, 0.0, 1.0}, {0.1, 1.0, 1.0}};
  CHECK(tva_quadrature(mix, kStd, 1.0).value ==
        doctest::Approx(0.1 * 0.3829249225480262).epsilon(1e-9));
}

TEST_CASE("tva_quadrature symmetry at a=1") {
  const auto pq = tva_quadrature(shifted(1.3, 0.8), {{1.0, 0.0, 0.8}}, 1.0);
  const auto qp = tva_quadrature({{1.0, 0.0, 0.8}}, shifted(1.3, 0.8), 1.0);
  CHECK(std::abs(pq.value - qp.value) < 1e-10);
}

TEST_CASE("tva_quadrature validates mixtures") {
  CHECK_THROWS(tva_quadrature({}, kStd, 1.0));
  CHECK_THROWS(tva_quadrature({{0.5, 0.0, 1.0}}, kStd, 1.0));
  CHECK_THROWS(tva_quadrature({{1.0, 0.0, -1.0}}, kStd, 1.0));
}

TEST_CASE("check_subsampling_lemma") {
  // q=1 degenerates to TV_a = TV_a.
  CHECK(check_subsampling_lemma(1.0, 1.0, 1.0, 1.0) <= 1e-10);
  CHECK(check_subsampling_lemma(1.0, 1.0, 0.5, 1.0) <= 1e-8);
  CHECK(check_subsampling_lemma(2.0, 0.5, 0.1, 0.95) <= 1e-8);
  // Reduced weight (a+q-1)/q < 0 is fine, the identity is algebraic.
  CHECK(check_subsampling_lemma(1.0, 1.0, 0.1, 0.25) <= 1e-8);
  CHECK_THROWS(check_subsampling_lemma(1.0, 1.0, 0.0, 1.0));
  CHECK_THROWS(check_subsampling_lemma(1.0, 1.0, 0.5, -1.0));
}

TEST_CASE("negative control: wrong leading constant breaks the match") {
  const double wrong =
      detail::tva_gaussian_closed_with_constant({1.0, 1.0, 1.0}, 1.0);
  CHECK(std::abs(wrong - tv_gaussian_exact(1.0, 1.0)) > 0.1);
}
