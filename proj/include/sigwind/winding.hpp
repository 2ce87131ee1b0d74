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
// Winding number of a closed path about the codimension-two affine subspace
// {x1 = xi1, x2 = xi2}, recovered from signature coordinates.
//
// With u = x1 - xi1, v = x2 - xi2 and f = u^2 + v^2,
//   F(s) = int f^s (u dv - v du),   2 pi W = F(-1),
// and F(-1) is the binomial interpolation series in the values F(0), F(1), ...
// Each F(k) is a finite pairing of the signature of the projected path with
// the dual tensors built in build_T.

#ifndef SIGWIND_WINDING_HPP
#define SIGWIND_WINDING_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigwind/errors.hpp"
#include "sigwind/interp.hpp"
#include "sigwind/scalar.hpp"
#include "sigwind/signature.hpp"
#include "sigwind/tensor_words.hpp"

namespace sigwind {

template <Scalar S>
struct WindingProblem {
  Polyline<S> path;
  std::vector<S> x1;
  std::vector<S> x2;
  S xi1{0};
  S xi2{0};

  void validate() const {
    const std::size_t d = path.dimension();
    if (x1.size() != d || x2.size() != d)
      throw std::invalid_argument("functionals must have " + std::to_string(d) + " components");
    if (!path.is_closed()) throw std::invalid_argument("winding number needs a closed path (first vertex != last)");
    // Gram determinant |x1|^2 |x2|^2 - (x1.x2)^2
    S a(0), b(0), c(0);
    for (std::size_t i = 0; i < d; ++i) {
      a += x1[i] * x1[i];
      b += x2[i] * x2[i];
      c += x1[i] * x2[i];
    }
    S gram = a * b - c * c;
    bool independent = ScalarTraits<S>::exact ? gram != 0 : to_double(gram) > 1e-24 * to_double(S(a * b));
    if (!independent) throw std::invalid_argument("functionals x1 and x2 are not linearly independent");
  }

  // (u, v) = (x1 . p - xi1, x2 . p - xi2) at every vertex.
  Polyline<S> projected() const { return path.projected({x1, x2}, {xi1, xi2}); }
};

struct AnnulusCertificate {
  double fMin = 0;
  double fMax = 0;
  double rho = 0;
  double r = 0;
  bool valid = false;
};

// Exact extrema of f = u^2 + v^2 along the projected path: on a segment
// a + t(b - a), f is a quadratic in t with its minimum at
// t* = -a.(b-a)/|b-a|^2 (clamped to [0,1]) and its maximum at an endpoint.
template <Scalar S>
AnnulusCertificate certify_annulus(const WindingProblem<S>& problem, std::optional<double> r = std::nullopt) {
  problem.validate();
  const Polyline<S> uv = problem.projected();
  if (uv.increments().empty()) throw std::invalid_argument("projected path is degenerate (zero length)");
  auto norm2 = [](const S& x, const S& y) { return S(x * x + y * y); };
  S fmin = norm2(uv.vertex(0)[0], uv.vertex(0)[1]);
  S fmax = fmin;
  for (std::size_t k = 1; k < uv.size(); ++k) {
    const auto& a = uv.vertex(k - 1);
    const auto& b = uv.vertex(k);
    const S fb = norm2(b[0], b[1]);
    if (fb > fmax) fmax = fb;
    if (fb < fmin) fmin = fb;
    const S dx = b[0] - a[0], dy = b[1] - a[1];
    const S len2 = norm2(dx, dy);
    if (len2 == 0) continue;
    const S dot = a[0] * dx + a[1] * dy;
    // interior minimum iff 0 < t* < 1
    if (dot < 0 && S(-dot) < len2) {
      const S interior = norm2(a[0], a[1]) - dot * dot / len2;
      if (interior < fmin) fmin = interior;
    }
  }
  AnnulusCertificate cert;
  cert.fMin = to_double(fmin);
  cert.fMax = to_double(fmax);
  const bool inside = fmin > S(1) / S(2) && fmax < S(2);
  cert.rho = (cert.fMin > 0) ? std::max(-std::log(cert.fMin), std::log(cert.fMax)) : std::numeric_limits<double>::infinity();
  cert.r = r ? *r : (cert.rho + std::numbers::ln2) / 2.0;
  cert.valid = inside && cert.rho < cert.r && cert.r < std::numbers::ln2;
  return cert;
}

inline std::string describe(const AnnulusCertificate& c) {
  std::ostringstream os;
  os.precision(17);
  os << "fMin=" << c.fMin << " fMax=" << c.fMax << " rho=" << c.rho << " r=" << c.r
     << (c.valid ? " (valid)" : " (invalid: need 1/2 < f < 2 strictly and rho < r < log 2)");
  return os.str();
}

// The dual tensor whose pairing with the signature of the rebased projected
// path gives int u^{j11+j12} v^{j21+j22} (u dv - v du) restricted to one term
// of the binomial expansions about the start point (p, q):
//
//   p^{j12} q^{j21} ( Sym[x1^{j11+1} x2^{j22}] x2 - Sym[x1^{j11} x2^{j22+1}] x1
//                     + p Sym[x1^{j11} x2^{j22}] x2 - q Sym[x1^{j11} x2^{j22}] x1 )
//
// Words have length j11 + j22 + 1 or j11 + j22 + 2.
template <Scalar S>
DualTensor<S> build_T(unsigned j11, unsigned j12, unsigned j21, unsigned j22, const S& p, const S& q) {
  DualTensor<S> t = symmetrization<S>(MultiIndex{j11 + 1, j22}).right_concat(Letter{2});
  t -= symmetrization<S>(MultiIndex{j11, j22 + 1}).right_concat(Letter{1});
  const DualTensor<S> base = symmetrization<S>(MultiIndex{j11, j22});
  t += base.right_concat(Letter{2}) * p;
  t -= base.right_concat(Letter{1}) * q;
  t *= S(power(p, j12) * power(q, j21));
  return t;
}

template <Scalar S>
DualTensor<S> build_T(unsigned j11, unsigned j12, unsigned j21, unsigned j22, const WindingProblem<S>& problem) {
  const Polyline<S> uv = problem.projected();
  return build_T<S>(j11, j12, j21, j22, uv.start()[0], uv.start()[1]);
}

enum class FkBackend {
  // ArrangementTable started at exp(start point): no basepoint expansion
  arrangements,
  // build_T words, each coordinate through a SignatureView
  lazy_words,
  // build_T words against a DenseSignature of level 2k+2
  dense,
};

// F(k) = int f^k (u dv - v du) for the projected path, memoized.
template <Scalar S>
class WindingEvaluator {
 public:
  explicit WindingEvaluator(const WindingProblem<S>& problem, FkBackend backend = FkBackend::arrangements,
                            SignatureBudget budget = {})
      : uv_(problem.projected()), view_(uv_), backend_(backend), budget_(budget) {}

  const Polyline<S>& projected_path() const noexcept { return uv_; }
  const SignatureView<S>& view() const noexcept { return view_; }

  // Evaluates F(0..k_max) at once; the arrangement backend builds one table.
  void prepare(std::size_t k_max) {
    if (backend_ == FkBackend::arrangements && (!table_ || table_->max_degree() < 2 * k_max + 1))
      table_ = std::make_unique<ArrangementTable<S>>(uv_, static_cast<unsigned>(2 * k_max + 1), uv_.start(), budget_);
    for (std::size_t k = values_.size(); k <= k_max; ++k) values_.push_back(compute_(static_cast<unsigned>(k)));
  }

  S F(std::size_t k) {
    prepare(k);
    return values_[k];
  }

  // Sum over k1 + k2 = k and the binomial splits of (u0 + y1)^{2k1}, (v0 + y2)^{2k2},
  // each paired against the signature (lazy or dense backend).
  S F_from_words(unsigned k) const {
    const S p = uv_.start()[0], q = uv_.start()[1];
    std::unique_ptr<DenseSignature<S>> dense;
    if (backend_ == FkBackend::dense)
      dense = std::make_unique<DenseSignature<S>>(polyline_signature(uv_, 2 * k + 2, budget_));
    Accumulator<S> acc;
    for (unsigned k1 = 0; k1 <= k; ++k1) {
      const unsigned k2 = k - k1;
      const S outer = binomial<S>(k, k1);
      for (unsigned j11 = 0; j11 <= 2 * k1; ++j11) {
        const unsigned j12 = 2 * k1 - j11;
        for (unsigned j22 = 0; j22 <= 2 * k2; ++j22) {
          const unsigned j21 = 2 * k2 - j22;
          const S coef = outer * binomial<S>(2 * k1, j11) * binomial<S>(2 * k2, j22);
          const DualTensor<S> t = build_T<S>(j11, j12, j21, j22, p, q);
          const S value = dense ? pair(t, *dense) : pair(t, view_);
          acc.add(S(coef * value));
        }
      }
    }
    return acc.value();
  }

 private:
  S compute_(unsigned k) const {
    if (backend_ != FkBackend::arrangements) return F_from_words(k);
    // f^k = sum_{k1} C(k,k1) u^{2k1} v^{2k2};  int u^a v^b dv = a! b! B((a,b), x2)
    Accumulator<S> acc;
    for (unsigned k1 = 0; k1 <= k; ++k1) {
      const unsigned k2 = k - k1;
      const S c = binomial<S>(k, k1);
      acc.add(S(c * table_->symmetrized(MultiIndex{2 * k1 + 1, 2 * k2}, 2)));
      acc.add(S(-c * table_->symmetrized(MultiIndex{2 * k1, 2 * k2 + 1}, 1)));
    }
    return acc.value();
  }

  Polyline<S> uv_;
  SignatureView<S> view_;
  FkBackend backend_;
  SignatureBudget budget_;
  std::unique_ptr<ArrangementTable<S>> table_;
  std::vector<S> values_;
};

// Smallest N with borel_prefactor * q^{N+1} / (2e^r - e^{2r}) < pi * margin.
inline std::size_t choose_N(const AnnulusCertificate& cert, double length1, double length2, double margin = 0.5,
                            std::size_t max_terms = 10000) {
  if (!cert.valid) throw CertificateError("annulus certificate invalid: " + describe(cert));
  const double pref = borel_prefactor(cert.rho, cert.r, length1, length2);
  for (std::size_t n = 0; n <= max_terms; ++n)
    if (tail_bound(2.0 * std::numbers::pi * pref, cert.r, n) < std::numbers::pi * margin) return n;
  throw CertificateError("no N <= " + std::to_string(max_terms) + " meets the truncation bound");
}

struct WindingOptions {
  std::optional<std::size_t> n_terms;  // otherwise chosen by choose_N
  std::optional<double> r;             // contour radius; default (rho + log 2)/2
  bool force = false;                  // proceed with an invalid certificate
  double margin = 0.5;                 // fraction of pi targeted by choose_N
  FkBackend backend = FkBackend::arrangements;
  SignatureBudget budget{};
};

struct WindingResult {
  long winding = 0;
  double partialSum = 0;  // (1/2pi) sum_{n<=N} Delta^n F
  std::size_t N = 0;
  double tailBound = std::numeric_limits<double>::infinity();  // bound on |2pi W - 2pi partialSum|
  AnnulusCertificate certificate;
  bool certified = false;
  double length1 = 0;
  double length2 = 0;
  // diagnostics, n = 0..N: F(n), the running outer sums (not divided by 2pi)
  // and the tail bound after n terms
  std::vector<double> F;
  std::vector<double> runningSums;
  std::vector<double> tailBounds;
};

template <Scalar S>
WindingResult winding_number(const WindingProblem<S>& problem, const WindingOptions& opt = {}) {
  problem.validate();
  WindingResult res;
  res.certificate = certify_annulus(problem, opt.r);
  if (!res.certificate.valid && !opt.force) throw CertificateError("annulus certificate invalid: " + describe(res.certificate));
  WindingEvaluator<S> eval(problem, opt.backend, opt.budget);
  const Polyline<S>& uv = eval.projected_path();
  res.length1 = to_double(uv.coordinate_variation(0));
  res.length2 = to_double(uv.coordinate_variation(1));
  if (opt.n_terms)
    res.N = *opt.n_terms;
  else
    res.N = choose_N(res.certificate, res.length1, res.length2, opt.margin);

  eval.prepare(res.N);
  SampleSequence<S> samples{{}, Provenance::signature_extracted};
  for (std::size_t k = 0; k <= res.N; ++k) samples.values.push_back(eval.F(k));
  // s = -1: (-1)^n C(-1, n) = 1, so the partial sums are running sums of Delta^n.
  const std::vector<S> delta = leading_differences(samples, res.N);
  S running(0);
  const bool bounded = res.certificate.valid;
  const double pref = bounded ? borel_prefactor(res.certificate.rho, res.certificate.r, res.length1, res.length2) : 0.0;
  for (std::size_t n = 0; n <= res.N; ++n) {
    running += delta[n];
    res.F.push_back(to_double(samples.values[n]));
    res.runningSums.push_back(to_double(running));
    res.tailBounds.push_back(bounded ? tail_bound(2.0 * std::numbers::pi * pref, res.certificate.r, n)
                                     : std::numeric_limits<double>::infinity());
  }
  const double two_pi = 2.0 * std::numbers::pi;
  res.partialSum = to_double(running) / two_pi;
  res.winding = std::lround(res.partialSum);
  res.tailBound = res.tailBounds.back();
  res.certified = bounded && res.tailBound / two_pi + std::abs(res.partialSum - double(res.winding)) < 0.5;
  return res;
}

}  // namespace sigwind

#endif  // SIGWIND_WINDING_HPP
