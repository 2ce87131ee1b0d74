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
// Binomial (Newton forward-difference) interpolation of an entire function of
// exponential type < log 2 from its values at 0, 1, 2, ...:
//
//   F(s) = sum_{n>=0} (-1)^n C(s,n) sum_{k<=n} (-1)^k C(n,k) F(k)
//
// The inner sums are formed first and the outer sum is taken in increasing n;
// the outer series converges absolutely only in that arrangement.
//
// The error after N terms is controlled through the Borel transform of F on a
// circle |w| = r, with r below log 2 so that |e^w - 1| < 1 on the circle.

#ifndef SIGWIND_INTERP_HPP
#define SIGWIND_INTERP_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigwind/errors.hpp"
#include "sigwind/scalar.hpp"

namespace sigwind {

enum class Provenance { signature_extracted, oracle, synthetic };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::signature_extracted: return "signature-extracted";
    case Provenance::oracle: return "oracle";
    case Provenance::synthetic: return "synthetic";
  }
  return "unknown";
}

// F(0), F(1), ..., F(last_index()).
template <class T>
struct SampleSequence {
  std::vector<T> values;
  Provenance provenance = Provenance::synthetic;

  std::size_t size() const noexcept { return values.size(); }
  std::size_t last_index() const {
    if (values.empty()) throw std::invalid_argument("empty sample sequence");
    return values.size() - 1;
  }
};

namespace detail {

template <class T>
double magnitude(const T& x) {
  if constexpr (is_complex<T>::value)
    return std::abs(x);
  else
    return std::fabs(to_double(x));
}

template <class T>
Complex as_complex(const T& x) {
  if constexpr (is_complex<T>::value)
    return Complex(x);
  else
    return Complex(to_double(x), 0.0);
}

template <class T>
void require_samples(const SampleSequence<T>& samples, std::size_t n) {
  if (samples.values.empty() || n > samples.last_index())
    throw std::out_of_range("need samples F(0..." + std::to_string(n) + "), have " +
                            std::to_string(samples.values.size()));
}

}  // namespace detail

// Delta^0 .. Delta^n at 0, from the table D^0 = F, D^m(k) = D^{m-1}(k) - D^{m-1}(k+1).
// Delta^m = sum_k (-1)^k C(m,k) F(k).
template <class T>
std::vector<T> leading_differences(const SampleSequence<T>& samples, std::size_t n) {
  detail::require_samples(samples, n);
  std::vector<T> row(samples.values.begin(), samples.values.begin() + static_cast<std::ptrdiff_t>(n + 1));
  std::vector<T> out;
  out.reserve(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    out.push_back(row[0]);
    for (std::size_t k = 0; k + 1 < row.size() - m; ++k) row[k] = row[k] - row[k + 1];
  }
  return out;
}

template <class T>
T forward_differences(const SampleSequence<T>& samples, std::size_t n) {
  return leading_differences(samples, n).back();
}

// The same quantity as the alternating binomial sum; exact modes agree with
// the table bit for bit, floating modes do not.
template <class T>
T forward_differences_alternating(const SampleSequence<T>& samples, std::size_t n) {
  detail::require_samples(samples, n);
  T acc(0);
  T c(1);  // C(n,k)
  for (std::size_t k = 0; k <= n; ++k) {
    if (k) {
      c = c * T(static_cast<long>(n - k + 1));
      c = c / T(static_cast<long>(k));
    }
    T term = c * samples.values[k];
    acc = (k % 2 == 0) ? T(acc + term) : T(acc - term);
  }
  return acc;
}

// Generalized binomial C(s, n) = s (s-1) ... (s-n+1) / n!, by the running
// product C(s,n) = C(s,n-1) (s-n+1) / n.
template <class T>
std::vector<T> binomial_series(const T& s, std::size_t n) {
  std::vector<T> out;
  out.reserve(n + 1);
  T c(1);
  out.push_back(c);
  for (std::size_t k = 1; k <= n; ++k) {
    c = c * T(s - T(static_cast<long>(k - 1)));
    c = c / T(static_cast<long>(k));
    out.push_back(c);
  }
  return out;
}

// max |e^w - 1|^2 over |w| = r, attained at w = r: e^{2r} - 2e^r + 1 = (e^r - 1)^2.
inline double circle_max_factor(double r) {
  const double m = std::expm1(r);
  return m * m;
}

// {|w| = r} lies inside {|e^w - 1| < 1}; true exactly for r < log 2.
inline bool circle_in_convergence_region(double r) { return r >= 0 && circle_max_factor(r) < 1.0; }

// Geometric tail (1/2pi) ||BF||_{L^1(|w|=r)} q^{N+1} / (1 - q) with
// q = e^{2r} - 2e^r + 1 and 1 - q = 2e^r - e^{2r}. Decreasing in N.
inline double tail_bound(double borel_l1, double r, std::size_t n_terms) {
  const double q = circle_max_factor(r);
  const double denom = 2.0 * std::exp(r) - std::exp(2.0 * r);
  if (!(r > 0) || !(denom > 0) || !(q < 1))
    throw std::invalid_argument("tail_bound: radius r=" + std::to_string(r) + " must lie in (0, log 2)");
  return borel_l1 / (2.0 * std::numbers::pi) * std::pow(q, static_cast<double>(n_terms + 1)) / denom;
}

// Tail for a general exponent s: (1/2pi) ||BF|| sum_{n>N} |C(s,n)| q^n.
// Reduces to tail_bound when |C(s,n)| = 1 (s = -1). Summed until the ratio
// q |1 - (s+1)/(n+1)| <= q (1 + |s+1|/(n+1)) < 1 lets the remainder be closed
// by a geometric bound.
inline double tail_bound(Complex s, double borel_l1, double r, std::size_t n_terms) {
  const double q = circle_max_factor(r);
  if (!(r > 0) || !(q < 1))
    throw std::invalid_argument("tail_bound: radius r=" + std::to_string(r) + " must lie in (0, log 2)");
  if (s == Complex(-1.0, 0.0)) return tail_bound(borel_l1, r, n_terms);
  const double scale = borel_l1 / (2.0 * std::numbers::pi);
  // a = |C(s,n)| q^n, advanced to n = N + 1
  double a = 1.0;
  for (std::size_t n = 1; n <= n_terms + 1; ++n) a *= std::abs(s - Complex(double(n - 1))) / double(n) * q;
  const double sp1 = std::abs(s + 1.0);
  double sum = 0.0;
  for (std::size_t n = n_terms + 1; a > 0.0; ++n) {
    sum += a;
    const double ratio = q * (1.0 + sp1 / double(n + 1));
    if (ratio < 1.0) {
      const double rest = a * ratio / (1.0 - ratio);
      if (rest <= 1e-17 * sum) {
        sum += rest;
        break;
      }
    }
    a *= std::abs(s - Complex(double(n))) / double(n + 1) * q;
  }
  return scale * sum;
}

// r e^{rho/2} (len1 + len2) / (r - rho): the Borel-transform bound for the
// winding form divided by 2pi, so that the tail is this times
// (e^{2r} - 2e^r + 1)^{N+1} / (2e^r - e^{2r}).
inline double borel_prefactor(double rho, double r, double length1, double length2) {
  if (!(rho >= 0) || !(rho < r)) throw std::invalid_argument("borel_prefactor: need 0 <= rho < r");
  if (!(r < std::numbers::ln2)) throw std::invalid_argument("borel_prefactor: need r < log 2");
  return r * std::exp(rho / 2.0) * (length1 + length2) / (r - rho);
}

// Lipschitz bound for (E o log o f) g on the trace:
//   Lip(g) max|E o log| + Lip(f) max|g| max|E' o log| / dist(0, hull f).
inline double lipschitz_bound_M(double sup_e, double sup_eprime, double lip_f, double lip_g, double sup_g,
                                double dist_hull) {
  if (!(dist_hull > 0)) throw CertificateError("hull of f touches zero: dist(0, hull) = " + std::to_string(dist_hull));
  return lip_g * sup_e + lip_f * sup_g * sup_eprime / dist_hull;
}

// Young-Loeve constant 1 / (1 - 2^{1 - 2/p}); equals 2 at p = 1.
inline double young_constant(double p) {
  if (!(p >= 1.0 && p < 2.0)) throw std::invalid_argument("p-variation exponent must lie in [1, 2)");
  return 1.0 / (1.0 - std::exp2(1.0 - 2.0 / p));
}

// |int (E o log o f) g dh| <= C_p M Lip(h) ||gamma||_p^2 + |E(log f) g|(0) |h(T) - h(0)|.
inline double trilinear_bound(double m, double lip_h, double length, double p, double boundary_term) {
  return young_constant(p) * m * lip_h * length * length + boundary_term;
}

// Inputs to the a priori bounds. rho bounds |log f| on the path, r is the
// contour radius.
struct BoundInputs {
  double rho = 0.0;
  double r = 0.0;
  double length1 = 0.0;  // 1-variation of x_1 o gamma
  double length2 = 0.0;  // 1-variation of x_2 o gamma
  double lipF = 0.0;
  double lipG = 0.0;
  double lipH = 0.0;
  double supG = 0.0;
  double supE = 0.0;
  double supEprime = 0.0;
  double distHull = 1.0;
  double p = 1.0;
  // Upper bound for int |g| |dh| along the path. Zero selects the winding
  // form value e^{rho/2} (length1 + length2).
  double weight = 0.0;

  void validate() const {
    if (p != 1.0)
      throw CertificateError("tail bounds are only available for bounded-variation paths (p = 1)");
    if (!(rho >= 0) || !(rho < r) || !(r < std::numbers::ln2))
      throw CertificateError("need 0 <= rho < r < log 2, got rho=" + std::to_string(rho) +
                             " r=" + std::to_string(r));
    if (!(distHull > 0)) throw CertificateError("hull of f touches zero");
  }
};

// ||BF||_{L^1(|w|=r)} <= 2 pi r W / (r - rho), from |F^{(n)}(0)| <= rho^n W.
inline double borel_l1_bound(const BoundInputs& b) {
  b.validate();
  const double w = b.weight > 0 ? b.weight : std::exp(b.rho / 2.0) * (b.length1 + b.length2);
  return 2.0 * std::numbers::pi * b.r * w / (b.r - b.rho);
}

template <class T>
struct InterpolationResult {
  T value{};
  std::size_t termsUsed = 0;
  std::optional<double> tailBound;
  // (-1)^n C(s,n) Delta^n for n = 0..termsUsed, and their magnitudes
  std::vector<T> terms;
  std::vector<double> perTermMagnitudes;
};

// Partial sum through n = N of sum_n (-1)^n C(s,n) Delta^n, given the leading
// differences Delta^0..Delta^N. Terms are added in increasing n.
template <class T>
InterpolationResult<T> interpolate_differences(const T& s, const std::vector<T>& delta,
                                               const std::optional<BoundInputs>& bounds = std::nullopt) {
  if (delta.empty()) throw std::invalid_argument("interpolate: no differences");
  const std::size_t n_terms = delta.size() - 1;
  const std::vector<T> binom = binomial_series(s, n_terms);
  InterpolationResult<T> out;
  out.termsUsed = n_terms;
  out.terms.reserve(n_terms + 1);
  T value(0);
  for (std::size_t n = 0; n <= n_terms; ++n) {
    T t = binom[n] * delta[n];
    if (n % 2 == 1) t = T(-t);
    value = value + t;
    out.perTermMagnitudes.push_back(detail::magnitude(t));
    out.terms.push_back(std::move(t));
  }
  out.value = value;
  if (bounds) out.tailBound = tail_bound(detail::as_complex(s), borel_l1_bound(*bounds), bounds->r, n_terms);
  return out;
}

// Partial sum through n = N. T is Complex, double or Rational; with Rational
// samples and a rational s the value is exact.
template <class T>
InterpolationResult<T> interpolate(const T& s, const SampleSequence<T>& samples, std::size_t n_terms,
                                   const std::optional<BoundInputs>& bounds = std::nullopt) {
  return interpolate_differences(s, leading_differences(samples, n_terms), bounds);
}

// Smallest N <= max_terms whose tail bound is below `tolerance`, or nullopt.
inline std::optional<std::size_t> terms_for_tolerance(Complex s, const BoundInputs& bounds, double tolerance,
                                                      std::size_t max_terms) {
  const double l1 = borel_l1_bound(bounds);
  for (std::size_t n = 0; n <= max_terms; ++n)
    if (tail_bound(s, l1, bounds.r, n) < tolerance) return n;
  return std::nullopt;
}

}  // namespace sigwind

#endif  // SIGWIND_INTERP_HPP
