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
// Range enclosures of polynomials along polylines, from Bernstein
// coefficients on subdivided segments.

#ifndef SIGWIND_ENCLOSURE_HPP
#define SIGWIND_ENCLOSURE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigwind/errors.hpp"
#include "sigwind/interp.hpp"
#include "sigwind/polynomial.hpp"
#include "sigwind/signature.hpp"

namespace sigwind {

struct Interval {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void hull(const Interval& o) {
    lo = std::min(lo, o.lo);
    hi = std::max(hi, o.hi);
  }
  double magnitude() const { return std::max(std::abs(lo), std::abs(hi)); }
};

namespace detail {

inline std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// p(t0 + w tau) as coefficients in tau.
inline std::vector<double> reparametrize(const std::vector<double>& p, double t0, double w) {
  std::vector<double> out(1, 0.0);
  const std::vector<double> lin{t0, w};
  for (std::size_t k = p.size(); k-- > 0;) {
    out = poly_mul(out, lin);
    out[0] += p[k];
  }
  out.resize(p.size());
  return out;
}

}  // namespace detail

// Coefficients c_k of t -> P(a + t (b - a)), lowest degree first.
inline std::vector<double> restrict_to_segment(const Polynomial<double>& p, const std::vector<double>& a,
                                               const std::vector<double>& b) {
  const std::size_t d = p.dim();
  if (a.size() != d || b.size() != d) throw std::invalid_argument("segment dimension mismatch");
  std::vector<double> out(p.degree() + 1, 0.0);
  for (const auto& [m, c] : p.terms()) {
    std::vector<double> term{c};
    for (std::size_t i = 0; i < d; ++i) {
      const std::vector<double> lin{a[i] - p.basepoint()[i], b[i] - a[i]};
      for (unsigned e = 0; e < m[i]; ++e) term = detail::poly_mul(term, lin);
    }
    for (std::size_t k = 0; k < term.size(); ++k) out[k] += term[k];
  }
  return out;
}

inline std::vector<double> derivative(const std::vector<double>& p) {
  if (p.size() <= 1) return {0.0};
  std::vector<double> out(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = static_cast<double>(k) * p[k];
  return out;
}

// Convex hull of the Bernstein coefficients of p on [t0, t1]; contains p([t0, t1]).
inline Interval bernstein_range(const std::vector<double>& p, double t0, double t1) {
  const std::vector<double> q = detail::reparametrize(p, t0, t1 - t0);
  const std::size_t n = q.size() - 1;
  Interval out;
  for (std::size_t k = 0; k <= n; ++k) {
    // b_k = sum_{j<=k} C(k,j) / C(n,j) q_j
    double b = 0, ratio = 1;  // C(k,j)/C(n,j)
    for (std::size_t j = 0; j <= k; ++j) {
      if (j) ratio *= static_cast<double>(k - j + 1) / static_cast<double>(n - j + 1);
      b += ratio * q[j];
    }
    out.lo = std::min(out.lo, b);
    out.hi = std::max(out.hi, b);
  }
  // absorb rounding in the conversion
  const double pad = 1e-13 * std::max(1.0, out.magnitude());
  out.lo -= pad;
  out.hi += pad;
  return out;
}

// Enclosure of p over every point of the path.
inline Interval range_on_path(const Polynomial<double>& p, const Polyline<double>& path, std::size_t pieces = 16) {
  Interval out;
  if (path.size() == 1) {
    const double v = p.evaluate(path.start());
    return {v, v};
  }
  for (std::size_t k = 1; k < path.size(); ++k) {
    const auto c = restrict_to_segment(p, path.vertex(k - 1), path.vertex(k));
    for (std::size_t j = 0; j < pieces; ++j)
      out.hull(bernstein_range(c, double(j) / double(pieces), double(j + 1) / double(pieces)));
  }
  return out;
}

// Upper bound for int |g| |dh| along the path.
inline double weight_bound(const Polynomial<double>& g, const Polynomial<double>& h, const Polyline<double>& path,
                           std::size_t pieces = 16) {
  double total = 0;
  for (std::size_t k = 1; k < path.size(); ++k) {
    const auto cg = restrict_to_segment(g, path.vertex(k - 1), path.vertex(k));
    const auto dh = derivative(restrict_to_segment(h, path.vertex(k - 1), path.vertex(k)));
    for (std::size_t j = 0; j < pieces; ++j) {
      const double t0 = double(j) / double(pieces), t1 = double(j + 1) / double(pieces);
      total += bernstein_range(cg, t0, t1).magnitude() * bernstein_range(dh, t0, t1).magnitude() * (t1 - t0);
    }
  }
  return total;
}

// Bound inputs for int f^s g dh from enclosures: rho = max |log f| and the
// weight int |g||dh|. Throws CertificateError unless 1/2 < f < 2 on the path.
inline BoundInputs interpolation_bounds(const Polynomial<double>& f, double weight, const Polyline<double>& path,
                                        std::optional<double> r = std::nullopt, Interval* f_range = nullptr) {
  const Interval fr = range_on_path(f, path);
  if (f_range) *f_range = fr;
  if (!(fr.lo > 0.5) || !(fr.hi < 2.0))
    throw CertificateError("f is not certified inside (1/2, 2): enclosure [" + std::to_string(fr.lo) + ", " +
                           std::to_string(fr.hi) + "]");
  BoundInputs b;
  b.rho = std::max(-std::log(fr.lo), std::log(fr.hi));
  b.r = r ? *r : (b.rho + std::numbers::ln2) / 2.0;
  b.distHull = fr.lo;
  b.weight = weight;
  b.validate();
  return b;
}

}  // namespace sigwind

#endif  // SIGWIND_ENCLOSURE_HPP
