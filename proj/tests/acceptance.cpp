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
// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "io.hpp"
#include "fixtures.hpp"
#include "sigwind/sigwind.hpp"

namespace {

using namespace sigwind;
using namespace sigwind::testing;
using nlohmann::json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Tolerances.
constexpr double kMomentRelTol = 1e-9;
constexpr double kInterpRelTol = 1e-6;
constexpr double kClosedFormRelTol = 1e-8;
constexpr double kCircleTol = 1e-9;
constexpr double kGridWidth = 1e-9;
constexpr double kAlgebraRelTol = 1e-10;
constexpr double kSlopeTarget = 2.0;
constexpr double kSlopeTol = 0.3;
constexpr double kRuntimeBudgetSeconds = 300.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Report {
 public:
  void record(int id, const std::string& title, const Outcome& o) {
    std::printf("[%s] criterion %d: %s -- %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures_;
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// Criteria 1 and 2 share the winding reports.
struct SuiteRun {
  std::string name;
  long oracle = 0;
  int exit_code = 0;
  json report;
};

std::vector<SuiteRun> run_winding_suite(double& seconds) {
  const auto dir = scratch_dir("acceptance");
  std::vector<SuiteRun> runs;
  const auto t0 = std::chrono::steady_clock::now();
  int idx = 0;
  for (const WindingCase& c : winding_suite()) {
    cli::WindingArgs args;
    args.input = write_csv(dir / ("case" + std::to_string(idx++) + ".csv"), c.vertices);
    args.x1 = join(c.x1);
    args.x2 = join(c.x2);
    args.xi1 = fmt("%.17g", c.xi1);
    args.xi2 = fmt("%.17g", c.xi2);
    const cli::CommandResult res = cli::run_winding(args, cli::Config{});
    SuiteRun run{c.name, c.oracle_winding(), res.exit_code, json()};
    if (!res.json.empty()) run.report = json::parse(res.json);
    runs.push_back(std::move(run));
  }
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::filesystem::remove_all(dir);
  return runs;
}

Outcome criterion_winding_suite(const std::vector<SuiteRun>& runs, double seconds) {
  Outcome o;
  std::ostringstream d;
  if (runs.size() < 6) o.pass = false;
  for (const SuiteRun& r : runs) {
    if (r.report.is_null()) {
      o.pass = false;
      d << r.name << ": no report (exit " << r.exit_code << "); ";
      continue;
    }
    const long w = r.report["winding"].get<long>();
    const bool certified = r.report["certified"].get<bool>();
    const double tail = r.report["tailBound"].is_null() ? INFINITY : r.report["tailBound"].get<double>();
    const double ps = r.report["partialSum"].get<double>();
    const double margin = tail / kTwoPi + std::abs(ps - static_cast<double>(w));
    const bool ok = w == r.oracle && certified && margin < 0.5 && r.exit_code == cli::kCertified;
    if (!ok) o.pass = false;
    d << r.name << ": W=" << w << " oracle=" << r.oracle << " N=" << r.report["N"].get<long>()
      << " margin=" << fmt("%.3g", margin) << (ok ? "" : " MISMATCH") << "; ";
  }
  if (seconds > kRuntimeBudgetSeconds) o.pass = false;
  d << runs.size() << " problems in " << fmt("%.2f", seconds) << " s";
  o.detail = d.str();
  return o;
}

Outcome criterion_partial_sum_soundness(const std::vector<SuiteRun>& runs) {
  Outcome o;
  std::size_t checked = 0, violations = 0;
  double worst = 0;  // largest |error| / bound
  for (const SuiteRun& r : runs) {
    if (r.report.is_null()) {
      o.pass = false;
      continue;
    }
    const auto& sums = r.report["runningSums"];
    const auto& bounds = r.report["tailBounds"];
    for (std::size_t n = 0; n < sums.size(); ++n) {
      const double err = std::abs(kTwoPi * static_cast<double>(r.oracle) - sums[n].get<double>());
      const double bound = bounds[n].is_null() ? INFINITY : bounds[n].get<double>();
      ++checked;
      worst = std::max(worst, err / bound);
      if (!(err <= bound)) ++violations;
    }
  }
  if (violations || checked == 0) o.pass = false;
  o.detail = std::to_string(checked) + " partial sums, " + std::to_string(violations) +
             " violations, max error/bound=" + fmt("%.3g", worst);
  return o;
}

Outcome criterion_moments() {
  Outcome o;
  Rng rng(3);
  double worst = 0;
  int bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const std::size_t nv = static_cast<std::size_t>(uniform_int(rng, 2, 8));
    std::vector<std::vector<double>> v(nv, std::vector<double>(d));
    for (auto& p : v)
      for (auto& x : p) x = uniform(rng, -1.0, 1.0);
    const Polyline<double> path(d, v);
    Polynomial<double> p = random_polynomial(rng, d, 4);
    Polynomial<double> q = random_polynomial(rng, d, 4);
    SignatureView<double> view(path);
    const double got = polynomial_integral(p, q, view);
    const auto ref = oracle::stieltjes_quadrature(path, Polynomial<double>::constant(d, 1.0), p, q, 0, 0.0,
                                                  {8, 1e-13, std::size_t{1} << 20});
    const double err = relative_error(got, ref.value.real());
    worst = std::max(worst, err);
    if (!(err <= kMomentRelTol)) ++bad;
  }
  // exact symmetrization against literal permutation sums
  int exact_cases = 0, exact_bad = 0;
  Rng rq(4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = static_cast<std::size_t>(uniform_int(rq, 1, 3));
    const Polyline<Rational> path = random_polyline<Rational>(rq, d, static_cast<std::size_t>(uniform_int(rq, 2, 5)));
    const auto [rebased, shift] = rebase(path);
    SignatureView<Rational> rview(rebased);
    MultiIndex alpha = random_multi_index(rq, d, 3);
    MultiIndex beta = random_multi_index(rq, d, 5 - alpha.total());
    if (beta.is_zero()) beta[0] = 1;
    if (alpha.total() + beta.total() > 5) continue;
    const Rational fast = monomial_integral(alpha, beta, rview);
    Rational slow(0);
    const MultiIndex total = alpha + beta;
    for (std::size_t i = 0; i < d; ++i) {
      if (beta[i] == 0) continue;
      MultiIndex c = total;
      c[i] -= 1;
      const Rational t = pair(brute_force_symmetrization<Rational>(c).right_concat(static_cast<Letter>(i + 1)), rview);
      slow += Rational(beta[i]) * t;
    }
    ++exact_cases;
    if (fast != slow) ++exact_bad;
  }
  o.pass = bad == 0 && exact_bad == 0 && exact_cases >= 50;
  o.detail = "100 float instances, max rel err " + fmt("%.2e", worst) + ", " + std::to_string(bad) + " over tolerance; " +
             std::to_string(exact_cases) + " rational instances, " + std::to_string(exact_bad) + " mismatches";
  return o;
}

Outcome criterion_interpolation_end_to_end() {
  Outcome o;
  const auto dir = scratch_dir("interp");
  const auto v = circle_points(64, 1.0, 0.0, 0.0, 1);
  const std::string file = write_csv(dir / "polygon64.csv", v);
  const Polyline<double> path(2, v);
  const auto f = Polynomial<double>::variable(2, 1).pow(2) + Polynomial<double>::variable(2, 2).pow(2);
  const auto g = Polynomial<double>::variable(2, 1);
  const auto h = Polynomial<double>::variable(2, 2);
  std::ostringstream d;
  for (const char* s_text : {"-1", "0.5", "-0.5+0.3i"}) {
    cli::InterpolateArgs args;
    args.input = file;
    args.f = "x1^2 + x2^2";
    args.g = "x1";
    args.h = "x2";
    args.s = s_text;
    args.tol = 1e-9;
    const cli::CommandResult res = cli::run_interpolate(args, cli::Config{});
    if (res.json.empty()) {
      o.pass = false;
      d << "s=" << s_text << ": failed (" << res.error << "); ";
      continue;
    }
    const json rep = json::parse(res.json);
    const Complex value(rep["value"]["re"].get<double>(), rep["value"]["im"].get<double>());
    const Complex s = cli::parse_complex(s_text);
    const auto ref = oracle::stieltjes_quadrature(path, f, g, h, 0, s, {8, 1e-13, std::size_t{1} << 20});
    const double dev = std::abs(value - ref.value);
    const double rel = dev / std::abs(ref.value);
    const double tail = rep["tailBound"].is_null() ? -1.0 : rep["tailBound"].get<double>();
    const bool ok = rel <= kInterpRelTol && tail >= dev && res.exit_code == cli::kCertified;
    if (!ok) o.pass = false;
    d << "s=" << s_text << ": N=" << rep["N"].get<long>() << " rel=" << fmt("%.2e", rel) << " dev=" << fmt("%.2e", dev)
      << " tail=" << fmt("%.2e", tail) << (ok ? "" : " FAIL") << "; ";
  }
  std::filesystem::remove_all(dir);
  o.detail = d.str();
  return o;
}

Outcome criterion_closed_forms() {
  Outcome o;
  std::ostringstream d;
  const double a = 1.2;
  // differences of (6/5)^k taken exactly, then rounded once
  const std::size_t n_geo = 40;
  SampleSequence<Rational> geo{{}, Provenance::synthetic};
  Rational ak(1);
  for (std::size_t k = 0; k <= n_geo; ++k, ak *= Rational(6, 5)) geo.values.push_back(ak);
  std::vector<double> geo_delta;
  for (const Rational& x : leading_differences(geo, n_geo)) geo_delta.push_back(to_double(x));
  for (double s : {-1.0, 0.5, 3.0}) {
    const auto r = interpolate_differences(s, geo_delta);
    const double err = relative_error(r.value, std::pow(a, s), 0.0);
    if (!(err <= kClosedFormRelTol)) o.pass = false;
    d << "a^" << s << " rel=" << fmt("%.1e", err) << "; ";
  }
  // cubic samples: exact in rational mode, zero terms beyond degree 3
  auto poly = [](const Rational& k) { return Rational(k * k * k - 2 * k + Rational(1, 3)); };
  SampleSequence<Rational> cubic{{}, Provenance::synthetic};
  for (int k = 0; k <= 12; ++k) cubic.values.push_back(poly(Rational(k)));
  int nonzero_tail = 0, inexact = 0;
  for (const Rational& s : {Rational(-2), Rational(-1), Rational(1, 2), Rational(5, 2)}) {
    const auto r = interpolate(s, cubic, 12);
    if (r.value != poly(s)) ++inexact;
    for (std::size_t n = 4; n < r.terms.size(); ++n)
      if (r.terms[n] != 0) ++nonzero_tail;
  }
  if (nonzero_tail || inexact) o.pass = false;
  d << "cubic: " << inexact << " inexact values, " << nonzero_tail << " nonzero terms beyond degree";
  o.detail = d.str();
  return o;
}

Outcome criterion_circle_geometry() {
  Outcome o;
  std::ostringstream d;
  for (double r : {0.2, 0.5, 0.69}) {
    double best = 0;
    for (int k = 0; k < 10000; ++k) {
      const Complex w = std::polar(r, kTwoPi * k / 10000.0);
      best = std::max(best, std::abs(std::exp(w) - 1.0));
    }
    const double err = std::abs(best - std::expm1(r));
    const double err_formula = std::abs(std::sqrt(circle_max_factor(r)) - std::expm1(r));
    if (!(err <= kCircleTol) || !(err_formula <= kCircleTol)) o.pass = false;
    d << "r=" << r << " |max-(e^r-1)|=" << fmt("%.1e", err) << "; ";
  }
  // grid straddling log 2
  int wrong = 0;
  for (int k = 1; k <= 1000; ++k) {
    if (!circle_in_convergence_region(std::numbers::ln2 - k * kGridWidth)) ++wrong;
    if (circle_in_convergence_region(std::numbers::ln2 + k * kGridWidth)) ++wrong;
  }
  // bisection on the predicate
  double lo = 0.5, hi = 1.0;
  while (hi - lo > kGridWidth) {
    const double mid = 0.5 * (lo + hi);
    (circle_in_convergence_region(mid) ? lo : hi) = mid;
  }
  const bool flip_ok = lo < std::numbers::ln2 + kGridWidth && hi > std::numbers::ln2 - kGridWidth;
  if (wrong || !flip_ok) o.pass = false;
  d << "grid misclassifications=" << wrong << ", bisection bracket [" << fmt("%.12f", lo) << ", " << fmt("%.12f", hi)
    << "]";
  o.detail = d.str();
  return o;
}

Outcome criterion_signature_algebra() {
  Outcome o;
  Rng rng(7);
  int shuffle_bad = 0, chen_bad = 0, rev_bad = 0, area_bad = 0;
  const int cases = 100;
  for (int t = 0; t < cases; ++t) {
    const std::size_t d = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const std::size_t nv = static_cast<std::size_t>(uniform_int(rng, 2, 6));
    // shuffle identity, float and exact
    {
      const Word u = random_word(rng, d, 3), w = random_word(rng, d, 3);
      const Polyline<double> pd = random_polyline<double>(rng, d, nv);
      SignatureView<double> view(pd);
      const double lhs = pair(shuffle<double>(u, w), view);
      const double rhs = view.coordinate(u) * view.coordinate(w);
      if (!(relative_error(lhs, rhs) <= kAlgebraRelTol)) ++shuffle_bad;
      const Polyline<Rational> pq = random_polyline<Rational>(rng, d, nv);
      SignatureView<Rational> vq(pq);
      if (pair(shuffle<Rational>(u, w), vq) != Rational(vq.coordinate(u) * vq.coordinate(w))) ++shuffle_bad;
    }
    // Chen: dense signature of a concatenation against the product of the halves
    {
      const Polyline<Rational> a = random_polyline<Rational>(rng, d, nv);
      const Polyline<Rational> b = random_polyline<Rational>(rng, d, static_cast<std::size_t>(uniform_int(rng, 2, 5)));
      const std::size_t level = 4;
      const auto joined = polyline_signature(a.followed_by(b), level);
      const auto product = chen_product(polyline_signature(a, level), polyline_signature(b, level), level);
      if (!(joined == product)) ++chen_bad;
      const Polyline<double> ad = random_polyline<double>(rng, d, nv), bd = random_polyline<double>(rng, d, 3);
      SignatureView<double> whole(ad.followed_by(bd)), va(ad), vb(bd);
      const Word w = random_word(rng, d, 5);
      double split = 0;
      for (std::size_t k = 0; k <= w.size(); ++k) {
        std::vector<Letter> l(w.letters().begin(), w.letters().end());
        const Word u(d, std::vector<Letter>(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(k)));
        const Word v(d, std::vector<Letter>(l.begin() + static_cast<std::ptrdiff_t>(k), l.end()));
        split += va.coordinate(u) * vb.coordinate(v);
      }
      if (!(relative_error(whole.coordinate(w), split) <= kAlgebraRelTol)) ++chen_bad;
    }
    // reversal inverts the signature
    {
      const Polyline<Rational> a = random_polyline<Rational>(rng, d, nv);
      const std::size_t level = 4;
      const auto x = chen_product(polyline_signature(a, level), polyline_signature(a.reversed(), level), level);
      if (!(x == DenseSignature<Rational>::identity(d, level))) ++rev_bad;
    }
    // level 2 antisymmetric part against the shoelace area
    {
      const Polyline<double> loop = random_closed_polyline<double>(rng, 2, nv + 2);
      const auto x = polyline_signature(loop, 2);
      const double lhs = x.coefficient(Word(2, {1, 2})) - x.coefficient(Word(2, {2, 1}));
      const double rhs = 2.0 * oracle::shoelace_area(loop);
      if (!(relative_error(lhs, rhs) <= kAlgebraRelTol)) ++area_bad;
    }
  }
  o.pass = shuffle_bad + chen_bad + rev_bad + area_bad == 0;
  o.detail = std::to_string(cases) + " cases each; failures: shuffle=" + std::to_string(shuffle_bad) +
             " chen=" + std::to_string(chen_bad) + " reversal=" + std::to_string(rev_bad) +
             " shoelace=" + std::to_string(area_bad);
  return o;
}

// F(s) = int f^s g dh on a rational 12-gon with f = (x1 - 1/10)^2 + x2^2,
// g = x1 - 1/10, h = x2. Samples F(k) are exact, the series partial sum is a
// polynomial in s evaluated exactly at s = -1 +- eps.
Outcome criterion_derivative() {
  Outcome o;
  const Polyline<Rational> path = pythagorean_polygon();
  const std::vector<Rational> centre{Rational(1, 10), Rational(0)};
  auto u = Polynomial<Rational>::variable(2, 1) - Polynomial<Rational>::constant(2, centre[0]);
  auto v = Polynomial<Rational>::variable(2, 2);
  const auto f = u * u + v * v;
  const std::size_t N = 28;

  SignatureView<Rational> view(path);
  MomentEvaluator<Rational> eval(view, MomentBackend::arrangements);
  SampleSequence<Rational> samples{std::vector<Rational>(N + 1), Provenance::signature_extracted};
  for (std::size_t k = N + 1; k-- > 0;) samples.values[k] = eval.integral(f.pow(static_cast<unsigned>(k)) * u, v);
  const std::vector<Rational> delta = leading_differences(samples, N);

  std::vector<std::vector<double>> vd;
  for (const auto& p : path.vertices()) vd.push_back({to_double(p[0]), to_double(p[1])});
  const Polyline<double> pd(2, vd);
  const auto ud = Polynomial<double>::variable(2, 1) - Polynomial<double>::constant(2, 0.1);
  const auto vdp = Polynomial<double>::variable(2, 2);
  const auto fd = ud * ud + vdp * vdp;
  const auto ref = oracle::stieltjes_quadrature(pd, fd, ud, vdp, 1, -1.0, {16, 1e-13, std::size_t{1} << 20});
  const double target = ref.value.real();

  std::vector<double> log_eps, log_err;
  std::ostringstream d;
  for (int e = 2; e <= 4; ++e) {
    Rational eps(1);
    for (int j = 0; j < e; ++j) eps /= 10;
    const Rational sp = Rational(-1) + eps, sm = Rational(-1) - eps;
    const Rational cd = Rational((interpolate_differences(sp, delta).value - interpolate_differences(sm, delta).value) /
                                 (2 * eps));
    const double err = std::abs(to_double(cd) - target);
    log_eps.push_back(std::log10(to_double(eps)));
    log_err.push_back(std::log10(err));
    d << "eps=1e-" << e << " err=" << fmt("%.3e", err) << "; ";
  }
  const double mx = (log_eps[0] + log_eps[1] + log_eps[2]) / 3.0, my = (log_err[0] + log_err[1] + log_err[2]) / 3.0;
  double sxy = 0, sxx = 0;
  for (int k = 0; k < 3; ++k) {
    sxy += (log_eps[k] - mx) * (log_err[k] - my);
    sxx += (log_eps[k] - mx) * (log_eps[k] - mx);
  }
  const double slope = sxy / sxx;
  o.pass = std::abs(slope - kSlopeTarget) <= kSlopeTol && ref.converged;
  d << "F'(-1) oracle=" << fmt("%.15g", target) << " slope=" << fmt("%.3f", slope);
  o.detail = d.str();
  return o;
}

}  // namespace

int main() {
  Report report;
  double seconds = 0;
  const auto runs = run_winding_suite(seconds);
  report.record(1, "winding recovery suite", criterion_winding_suite(runs, seconds));
  report.record(2, "partial-sum soundness", criterion_partial_sum_soundness(runs));
  report.record(3, "moment extraction", criterion_moments());
  report.record(4, "interpolation end to end", criterion_interpolation_end_to_end());
  report.record(5, "interpolation closed forms", criterion_closed_forms());
  report.record(6, "circle geometry", criterion_circle_geometry());
  report.record(7, "signature algebra", criterion_signature_algebra());
  report.record(8, "derivative check", criterion_derivative());
  std::printf("%d of 8 criteria failed\n", report.failures());
  return report.failures() == 0 ? 0 : 1;
}
