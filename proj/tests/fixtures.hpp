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
// Shared test fixtures: random words, polylines and polynomials, closed test
// curves, and brute-force references.

#ifndef SIGWIND_TESTS_FIXTURES_HPP
#define SIGWIND_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "sigwind/sigwind.hpp"

namespace sigwind::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// a / b in lowest terms; the two-argument mpq constructor does not reduce.
inline Rational fraction(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

// Coordinates are multiples of 1/8 in [-2, 2], so they are exact in both modes.
template <Scalar S>
S random_coordinate(Rng& rng) {
  return S(uniform_int(rng, -16, 16)) / S(8);
}

template <Scalar S>
Polyline<S> random_polyline(Rng& rng, std::size_t dim, std::size_t vertices) {
  std::vector<std::vector<S>> v(vertices, std::vector<S>(dim));
  for (auto& p : v)
    for (auto& x : p) x = random_coordinate<S>(rng);
  return Polyline<S>(dim, std::move(v));
}

template <Scalar S>
Polyline<S> random_closed_polyline(Rng& rng, std::size_t dim, std::size_t vertices) {
  Polyline<S> open = random_polyline<S>(rng, dim, vertices);
  std::vector<std::vector<S>> v = open.vertices();
  v.push_back(v.front());
  return Polyline<S>(dim, std::move(v));
}

inline Word random_word(Rng& rng, std::size_t alphabet, std::size_t max_length) {
  const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(max_length)));
  std::vector<Letter> letters(n);
  for (auto& l : letters) l = static_cast<Letter>(uniform_int(rng, 1, static_cast<int>(alphabet)));
  return Word(alphabet, std::move(letters));
}

inline MultiIndex random_multi_index(Rng& rng, std::size_t dim, unsigned max_total) {
  MultiIndex m(dim);
  const unsigned total = static_cast<unsigned>(uniform_int(rng, 0, static_cast<int>(max_total)));
  for (unsigned k = 0; k < total; ++k) m[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(dim) - 1))] += 1;
  return m;
}

// Up to `terms` monomials of total degree <= max_degree, coefficients in [-1, 1].
inline Polynomial<double> random_polynomial(Rng& rng, std::size_t dim, unsigned max_degree, int terms = 4) {
  Polynomial<double> p(dim);
  for (int t = 0; t < terms; ++t) p.add_term(random_multi_index(rng, dim, max_degree), uniform(rng, -1.0, 1.0));
  if (p.is_zero()) p.add_term(MultiIndex(dim), 1.0);
  return p;
}

// Literal sum over all n! orderings of the factors x_1^{c_1} ... x_d^{c_d}.
template <Scalar S>
DualTensor<S> brute_force_symmetrization(const MultiIndex& counts) {
  std::vector<Letter> factors;
  for (std::size_t i = 0; i < counts.dim(); ++i) factors.insert(factors.end(), counts[i], static_cast<Letter>(i + 1));
  std::vector<std::size_t> sigma(factors.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  DualTensor<S> out(counts.dim());
  do {
    std::vector<Letter> w(factors.size());
    for (std::size_t k = 0; k < sigma.size(); ++k) w[k] = factors[sigma[k]];
    out.add_term(Word(counts.dim(), std::move(w)), S(1));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

// All interleavings enumerated as subsets of positions taken by u.
template <Scalar S>
DualTensor<S> brute_force_shuffle(const Word& u, const Word& w) {
  const std::size_t n = u.size() + w.size();
  DualTensor<S> out(u.alphabet());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != u.size()) continue;
    std::vector<Letter> letters;
    std::size_t iu = 0, iw = 0;
    for (std::size_t k = 0; k < n; ++k) letters.push_back((mask >> k) & 1u ? u[iu++] : w[iw++]);
    out.add_term(Word(u.alphabet(), std::move(letters)), S(1));
  }
  return out;
}

// Points c + rho(t) (cos t, sin t) for t = 2 pi turns k / n, closed.
inline std::vector<std::vector<double>> circle_points(std::size_t n, double radius, double cx, double cy,
                                                      int turns = 1) {
  std::vector<std::vector<double>> v;
  const std::size_t total = n * static_cast<std::size_t>(std::abs(turns));
  const double sign = turns < 0 ? -1.0 : 1.0;
  for (std::size_t k = 0; k < total; ++k) {
    const double t = sign * 2.0 * std::numbers::pi * static_cast<double>(k % n) / static_cast<double>(n);
    v.push_back({cx + radius * std::cos(t), cy + radius * std::sin(t)});
  }
  v.push_back(v.front());
  return v;
}

struct WindingCase {
  std::string name;
  std::size_t dimension;
  std::vector<std::vector<double>> vertices;
  std::vector<double> x1, x2;
  double xi1, xi2;

  WindingProblem<double> problem() const { return {Polyline<double>(dimension, vertices), x1, x2, xi1, xi2}; }
  long oracle_winding() const { return oracle::angle_winding(problem().projected(), {0.0, 0.0}); }
};

// The certified suite: CCW and CW 64-gons, a double loop, a loop not around
// the centre, and two jittered circles (one in R^3 with oblique functionals).
inline std::vector<WindingCase> winding_suite() {
  std::vector<WindingCase> out;
  out.push_back({"64-gon ccw", 2, circle_points(64, 1.0, 0.0, 0.0, 1), {1, 0}, {0, 1}, 0.0, 0.0});
  out.push_back({"64-gon cw", 2, circle_points(64, 1.0, 0.0, 0.0, -1), {1, 0}, {0, 1}, 0.0, 0.0});
  out.push_back({"double loop", 2, circle_points(48, 1.0, 0.5, -0.25, 2), {1, 0}, {0, 1}, 0.5, -0.25});

  // lens: out along radius 1.2 from -60 to 60 degrees, back along radius 0.85
  {
    std::vector<std::vector<double>> v;
    const int m = 32;
    const double a = std::numbers::pi / 3.0;
    for (int k = 0; k <= m; ++k) {
      const double t = -a + 2.0 * a * k / m;
      v.push_back({1.2 * std::cos(t), 1.2 * std::sin(t)});
    }
    for (int k = 0; k <= m; ++k) {
      const double t = a - 2.0 * a * k / m;
      v.push_back({0.85 * std::cos(t), 0.85 * std::sin(t)});
    }
    v.push_back(v.front());
    out.push_back({"lens (not enclosing)", 2, v, {1, 0}, {0, 1}, 0.0, 0.0});
  }

  Rng rng(20260101);
  {
    const double cx = 0.3, cy = -0.2;
    std::vector<std::vector<double>> v;
    for (int k = 0; k < 72; ++k) {
      const double t = 2.0 * std::numbers::pi * k / 72.0;
      const double rad = uniform(rng, 0.85, 1.2);
      v.push_back({cx + rad * std::cos(t), cy + rad * std::sin(t)});
    }
    v.push_back(v.front());
    out.push_back({"jittered circle", 2, v, {1, 0}, {0, 1}, cx, cy});
  }
  {
    // x1 = (1, 0.2, 0), x2 = (0, 1, 0.3); vertices chosen so that the
    // projection (u, v) is a jittered circle about (xi1, xi2)
    const double xi1 = -0.4, xi2 = 0.7;
    std::vector<std::vector<double>> v;
    for (int k = 0; k < 80; ++k) {
      const double t = -2.0 * std::numbers::pi * k / 80.0;
      const double rad = uniform(rng, 0.85, 1.2);
      const double u = xi1 + rad * std::cos(t), w = xi2 + rad * std::sin(t);
      const double z = uniform(rng, -1.0, 1.0);
      const double b = w - 0.3 * z;
      const double a = u - 0.2 * b;
      v.push_back({a, b, z});
    }
    v.push_back(v.front());
    out.push_back({"jittered circle in R^3", 3, v, {1, 0.2, 0}, {0, 1, 0.3}, xi1, xi2});
  }
  return out;
}

inline std::string write_csv(const std::filesystem::path& file, const std::vector<std::vector<double>>& vertices) {
  std::ofstream out(file);
  out << "# test polyline\n";
  out.precision(17);
  for (const auto& p : vertices) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
    out << "\n";
  }
  return file.string();
}

inline std::string join(const std::vector<double>& v) {
  std::string s;
  char buf[40];
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", v[i]);
    s += (i ? "," : "") + std::string(buf);
  }
  return s;
}

inline std::filesystem::path scratch_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() / ("sigwind_" + tag + "_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

inline double relative_error(double a, double b, double floor = 1.0) {
  return std::abs(a - b) / std::max(std::abs(b), floor);
}

// A rational 12-gon on the unit circle through (1,0), (4/5,3/5), (3/5,4/5), ...
inline Polyline<Rational> pythagorean_polygon() {
  const std::vector<std::pair<int, int>> q1{{5, 0}, {4, 3}, {3, 4}, {0, 5}};
  std::vector<std::vector<Rational>> v;
  auto push = [&](int a, int b) { v.push_back({Rational(Rational(a) / 5), Rational(Rational(b) / 5)}); };
  for (auto [a, b] : q1) push(a, b);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{-3, 4}, {-4, 3}, {-5, 0}, {-4, -3}, {-3, -4}, {0, -5}, {3, -4}, {4, -3}})
    push(a, b);
  v.push_back(v.front());
  return Polyline<Rational>(2, std::move(v));
}

}  // namespace sigwind::testing

#endif  // SIGWIND_TESTS_FIXTURES_HPP
