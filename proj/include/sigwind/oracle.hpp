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
// Brute-force reference values, computed directly from the path geometry.
// Nothing here touches signatures, words or the interpolation series; the
// polynomials are only read as coefficient tables.

#ifndef SIGWIND_ORACLE_HPP
#define SIGWIND_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigwind/polynomial.hpp"
#include "sigwind/signature.hpp"

namespace sigwind::oracle {

struct QuadratureOptions {
  std::size_t initial_points = 8;  // per segment
  double rel_tol = 1e-11;
  std::size_t max_points = std::size_t{1} << 20;  // per segment
};

struct QuadratureResult {
  Complex value;
  bool converged = false;
  std::size_t points = 0;  // per segment at the last refinement
};

namespace detail {

// Value and directional derivative along `dir` of a polynomial at x.
inline void eval_poly(const Polynomial<double>& p, const std::vector<double>& x, const std::vector<double>& dir,
                      double& value, double& slope) {
  const std::size_t d = p.dim();
  value = 0;
  slope = 0;
  std::vector<double> y(d);
  for (std::size_t i = 0; i < d; ++i) y[i] = x[i] - p.basepoint()[i];
  for (const auto& [m, c] : p.terms()) {
    double mono = c;
    for (std::size_t i = 0; i < d; ++i) mono *= std::pow(y[i], static_cast<int>(m[i]));
    value += mono;
    for (std::size_t i = 0; i < d; ++i) {
      if (m[i] == 0 || dir[i] == 0) continue;
      double partial = c * m[i] * std::pow(y[i], static_cast<int>(m[i]) - 1);
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) partial *= std::pow(y[j], static_cast<int>(m[j]));
      slope += partial * dir[i];
    }
  }
}

}  // namespace detail

// int_path (log f)^k f^s g dh by composite midpoint sums on every segment,
// Richardson-extrapolated and doubled until two successive estimates agree to
// rel_tol (relative to the larger of |value| and int |integrand|). f must be
// positive on the path; the real logarithm is used.
inline QuadratureResult stieltjes_quadrature(const Polyline<double>& path, const Polynomial<double>& f,
                                             const Polynomial<double>& g, const Polynomial<double>& h, unsigned k,
                                             Complex s, const QuadratureOptions& opt = {}) {
  const std::size_t d = path.dimension();
  if (f.dim() != d || g.dim() != d || h.dim() != d)
    throw std::invalid_argument("oracle: polynomial dimension does not match path");
  auto midpoint_sum = [&](std::size_t n, double& mass) {
    Complex total(0.0, 0.0);
    mass = 0;
    std::vector<double> x(d), dir(d);
    for (std::size_t seg = 1; seg < path.size(); ++seg) {
      const auto& a = path.vertex(seg - 1);
      const auto& b = path.vertex(seg);
      for (std::size_t i = 0; i < d; ++i) dir[i] = b[i] - a[i];
      Complex seg_total(0.0, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        const double t = (static_cast<double>(j) + 0.5) / static_cast<double>(n);
        for (std::size_t i = 0; i < d; ++i) x[i] = a[i] + t * dir[i];
        double fv, fs, gv, gs, hv, hs;
        detail::eval_poly(f, x, dir, fv, fs);
        detail::eval_poly(g, x, dir, gv, gs);
        detail::eval_poly(h, x, dir, hv, hs);
        if (!(fv > 0)) throw std::domain_error("oracle: f is not positive on the path (f=" + std::to_string(fv) + ")");
        const double lf = std::log(fv);
        Complex v = std::exp(s * lf) * (gv * hs);
        if (k) v *= std::pow(lf, static_cast<int>(k));
        seg_total += v;
        mass += std::abs(v);
      }
      total += seg_total / static_cast<double>(n);
    }
    return total;
  };

  QuadratureResult res;
  double mass = 0, mass2 = 0;
  std::size_t n = std::max<std::size_t>(opt.initial_points, 1);
  Complex coarse = midpoint_sum(n, mass);
  Complex fine = midpoint_sum(2 * n, mass2);
  Complex prev = (4.0 * fine - coarse) / 3.0;
  n *= 2;
  while (2 * n <= opt.max_points) {
    coarse = fine;
    fine = midpoint_sum(2 * n, mass2);
    n *= 2;
    Complex est = (4.0 * fine - coarse) / 3.0;
    const double scale = std::max(std::abs(est), mass2 / static_cast<double>(n));
    const double diff = std::abs(est - prev);
    prev = est;
    if (diff <= opt.rel_tol * scale) {
      res.converged = true;
      break;
    }
  }
  res.value = prev;
  res.points = n;
  return res;
}

// Sum of the signed angles subtended at `center` by the segments, over 2 pi.
inline long angle_winding(const Polyline<double>& path2d, const std::vector<double>& center) {
  if (path2d.dimension() != 2 || center.size() != 2) throw std::invalid_argument("angle_winding needs a planar path");
  if (!path2d.is_closed()) throw std::invalid_argument("angle_winding needs a closed path");
  double total = 0;
  for (std::size_t k = 1; k < path2d.size(); ++k) {
    const double ax = path2d.vertex(k - 1)[0] - center[0], ay = path2d.vertex(k - 1)[1] - center[1];
    const double bx = path2d.vertex(k)[0] - center[0], by = path2d.vertex(k)[1] - center[1];
    const double cross = ax * by - ay * bx;
    const double dot = ax * bx + ay * by;
    const double len2 = (bx - ax) * (bx - ax) + (by - ay) * (by - ay);
    // distance from center to the segment
    double t = len2 > 0 ? -(ax * (bx - ax) + ay * (by - ay)) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const double px = ax + t * (bx - ax), py = ay + t * (by - ay);
    const double scale = std::max({std::hypot(ax, ay), std::hypot(bx, by), 1.0});
    if (std::hypot(px, py) <= 1e-14 * scale) throw std::domain_error("angle_winding: path passes through the center");
    total += std::atan2(cross, dot);
  }
  const double turns = total / (2.0 * std::numbers::pi);
  const double nearest = std::round(turns);
  if (std::abs(turns - nearest) > 1e-9)
    throw std::runtime_error("angle_winding: accumulated angle is not an integer multiple of 2 pi");
  return static_cast<long>(nearest);
}

// Signed area enclosed by a closed planar polyline.
inline double shoelace_area(const Polyline<double>& path2d) {
  if (path2d.dimension() != 2) throw std::invalid_argument("shoelace_area needs a planar path");
  if (!path2d.is_closed()) throw std::invalid_argument("shoelace_area needs a closed path");
  double twice = 0;
  for (std::size_t k = 1; k < path2d.size(); ++k) {
    const auto& a = path2d.vertex(k - 1);
    const auto& b = path2d.vertex(k);
    twice += a[0] * b[1] - b[0] * a[1];
  }
  return twice / 2.0;
}

}  // namespace sigwind::oracle

#endif  // SIGWIND_ORACLE_HPP
