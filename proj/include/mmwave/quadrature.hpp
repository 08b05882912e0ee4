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

#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace mmwave {

/// Raised when an adaptive integration exhausts its evaluation budget.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureOptions {
  double relative_tolerance = 1e-8;
  /// Absolute floor, used when the integral itself is (close to) zero.
  double absolute_tolerance = 0.0;
  std::size_t max_evaluations = 1'000'000;
  /// Uniform panels the interval is cut into before adapting.
  int initial_panels = 8;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Adaptive Simpson integration with Richardson extrapolation on accepted
/// panels. Throws QuadratureError when the budget runs out before every panel
/// meets its share of the tolerance.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureOptions& options = {});

}  // namespace mmwave
