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

#include "mmwave/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace mmwave {

namespace {

struct Panel {
  double a, m, b;
  double fa, fm, fb;
  double whole;
  double tolerance;
  int depth;
};

constexpr int kMaxDepth = 60;

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureOptions& options) {
  QuadratureResult result;
  if (a == b) return result;
  const double sign = b > a ? 1.0 : -1.0;
  if (b < a) std::swap(a, b);

  std::size_t evaluations = 0;
  auto eval = [&](double x) {
    ++evaluations;
    const double y = f(x);
    if (!std::isfinite(y)) throw QuadratureError("integrand is not finite at x = " + std::to_string(x));
    return y;
  };

  // Coarse pass: seeds the panels and fixes the absolute target.
  const int panels = std::max(1, options.initial_panels);
  const double h = (b - a) / panels;
  std::vector<Panel> stack;
  double coarse = 0.0;
  double f_left = eval(a);
  for (int i = 0; i < panels; ++i) {
    const double pa = a + i * h;
    const double pb = i + 1 == panels ? b : a + (i + 1) * h;
    const double pm = 0.5 * (pa + pb);
    const double fm = eval(pm);
    const double fb = eval(pb);
    const double whole = (pb - pa) / 6.0 * (f_left + 4.0 * fm + fb);
    coarse += whole;
    stack.push_back({pa, pm, pb, f_left, fm, fb, whole, 0.0, 0});
    f_left = fb;
  }
  const double target = std::max(options.relative_tolerance * std::abs(coarse), options.absolute_tolerance);
  if (target == 0.0) {
    // Integrand vanished on every sample; nothing to refine against.
    result.evaluations = evaluations;
    return result;
  }
  for (auto& p : stack) p.tolerance = target * (p.b - p.a) / (b - a);

  double total = 0.0;
  double error = 0.0;
  while (!stack.empty()) {
    if (evaluations > options.max_evaluations) {
      throw QuadratureError("adaptive Simpson exceeded " + std::to_string(options.max_evaluations) +
                            " evaluations on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
    }
    const Panel p = stack.back();
    stack.pop_back();
    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (p.m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
    const double right = (p.b - p.m) / 6.0 * (p.fm + 4.0 * frm + p.fb);
    const double delta = left + right - p.whole;
    if (std::abs(delta) <= 15.0 * p.tolerance || p.depth >= kMaxDepth) {
      if (p.depth >= kMaxDepth && std::abs(delta) > 15.0 * p.tolerance) {
        throw QuadratureError("adaptive Simpson hit maximum subdivision depth near x = " + std::to_string(p.m));
      }
      total += left + right + delta / 15.0;
      error += std::abs(delta) / 15.0;
      continue;
    }
    stack.push_back({p.m, rm, p.b, p.fm, frm, p.fb, right, p.tolerance / 2.0, p.depth + 1});
    stack.push_back({p.a, lm, p.m, p.fa, flm, p.fm, left, p.tolerance / 2.0, p.depth + 1});
  }
  result.value = sign * total;
  result.error_estimate = error;
  result.evaluations = evaluations;
  return result;
}

}  // namespace mmwave
