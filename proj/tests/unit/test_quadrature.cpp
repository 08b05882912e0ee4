// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The mmwave-indoor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "mmwave/quadrature.hpp"

using namespace mmwave;

TEST_SUITE("quadrature") {
  TEST_CASE("polynomials and smooth functions") {
    CHECK(adaptive_simpson([](double x) { return x * x * x; }, 0.0, 2.0).value == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, M_PI).value ==
          doctest::Approx(2.0).epsilon(1e-9));
    CHECK(adaptive_simpson([](double x) { return std::exp(-x * x); }, -6.0, 6.0).value ==
          doctest::Approx(std::sqrt(M_PI)).epsilon(1e-9));
  }

  TEST_CASE("curved integrand near an endpoint") {
    const auto r = adaptive_simpson([](double x) { return std::sqrt(x); }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
    CHECK(r.evaluations > 0);
  }

  TEST_CASE("degenerate and reversed intervals") {
    CHECK(adaptive_simpson([](double) { return 1.0; }, 1.0, 1.0).value == 0.0);
    CHECK(adaptive_simpson([](double x) { return x; }, 1.0, 0.0).value == doctest::Approx(-0.5));
    CHECK(adaptive_simpson([](double) { return 0.0; }, 0.0, 1.0).value == 0.0);
  }

  TEST_CASE("failures are reported") {
    CHECK_THROWS_AS(adaptive_simpson([](double) { return NAN; }, 0.0, 1.0), QuadratureError);
    QuadratureOptions tight;
    tight.relative_tolerance = 1e-15;
    tight.max_evaluations = 50;
    CHECK_THROWS_AS(adaptive_simpson([](double x) { return std::sqrt(x); }, 0.0, 1.0, tight), QuadratureError);
  }
}
