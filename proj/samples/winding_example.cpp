/* Copyright 2026 The sigwind Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// A closed loop in R^3 that goes twice around the line {x1 = 0.1, x2 = 0}
// while oscillating in x3. Prints the recovered winding number next to the
// angle count.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "sigwind/sigwind.hpp"

int main() {
  using namespace sigwind;
  const int n = 96;
  std::vector<std::vector<double>> v;
  for (int k = 0; k <= n; ++k) {
    const double t = 4.0 * std::numbers::pi * k / n;
    const double radius = 1.0 + 0.1 * std::sin(3.0 * t);
    v.push_back({0.1 + radius * std::cos(t), radius * std::sin(t), 0.5 * std::cos(5.0 * t)});
  }
  v.back() = v.front();
  WindingProblem<double> problem{Polyline<double>(3, v), {1, 0, 0}, {0, 1, 0}, 0.1, 0.0};

  const WindingResult r = winding_number(problem);
  const long angles = oracle::angle_winding(problem.projected(), {0.0, 0.0});
  std::printf("annulus: %s\n", describe(r.certificate).c_str());
  std::printf("N = %zu, partial sum / 2pi = %.12f, tail bound / 2pi = %.3g\n", r.N, r.partialSum,
              r.tailBound / (2.0 * std::numbers::pi));
  std::printf("winding = %ld (%s), angle count = %ld\n", r.winding, r.certified ? "certified" : "uncertified", angles);
  return r.winding == angles ? 0 : 1;
}
