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
// Stieltjes integrals of polynomials along a path, read off its signature.
//
// For a path y starting at the origin,
//   int y^alpha d(y^beta) = sum_i beta_i int y^{alpha+beta-e_i} dy_i
// and y^c = <x_1 sh ... sh x_d (with multiplicities c), X_{0,t}> is the sum
// over all permutations of the factors of x^{(x)c}, so
//   int y^c dy_i = < symmetrization(c) x_i , X >.
// Paths that do not start at the origin are handled by re-expanding the
// polynomials about the starting point.

#ifndef SIGWIND_MOMENTS_HPP
#define SIGWIND_MOMENTS_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sigwind/polynomial.hpp"
#include "sigwind/scalar.hpp"
#include "sigwind/signature.hpp"
#include "sigwind/tensor_words.hpp"

namespace sigwind {

// The translate of `path` starting at the origin, and the shift (its old start).
template <Scalar S>
std::pair<Polyline<S>, std::vector<S>> rebase(const Polyline<S>& path) {
  std::vector<S> shift = path.start();
  std::vector<S> neg(shift.size());
  for (std::size_t i = 0; i < shift.size(); ++i) neg[i] = -shift[i];
  return {path.translated(neg), std::move(shift)};
}

// int_{y} y^alpha d(y^beta) where y is the path of `view` rebased to start at
// the origin. beta = 0 gives 0.
template <Scalar S>
S monomial_integral(const MultiIndex& alpha, const MultiIndex& beta, const SignatureView<S>& view) {
  if (alpha.dim() != beta.dim()) throw std::invalid_argument("monomial_integral: alpha/beta dimension mismatch");
  if (alpha.dim() != view.dimension())
    throw std::invalid_argument("monomial_integral: multi-index dimension does not match path dimension");
  const std::size_t d = alpha.dim();
  const MultiIndex total = alpha + beta;
  Accumulator<S> acc;
  for (std::size_t i = 0; i < d; ++i) {
    if (beta[i] == 0) continue;
    if (total[i] == 0) throw std::invalid_argument("monomial_integral: inconsistent multi-indices");
    MultiIndex counts = total;
    counts[i] -= 1;
    DualTensor<S> t = symmetrization<S>(counts).right_concat(static_cast<Letter>(i + 1));
    acc.add(S(S(beta[i]) * pair(t, view)));
  }
  return acc.value();
}

enum class MomentBackend {
  // symmetrization into words, each paired through a SignatureView
  words,
  // ArrangementTable recursion on letter counts, expanded about the
  // polynomials' own basepoint
  arrangements,
};

// Evaluates int P dQ for many polynomial pairs over one path, caching the
// symmetrized one-form pairings it needs.
template <Scalar S>
class MomentEvaluator {
 public:
  explicit MomentEvaluator(const SignatureView<S>& view, MomentBackend backend = MomentBackend::words,
                           SignatureBudget budget = {})
      : view_(view), backend_(backend), budget_(budget) {}

  const SignatureView<S>& view() const noexcept { return view_; }
  MomentBackend backend() const noexcept { return backend_; }

  // int y^alpha d(y^beta) on the rebased path.
  S monomial(const MultiIndex& alpha, const MultiIndex& beta) {
    if (alpha.dim() != view_.dimension() || beta.dim() != view_.dimension())
      throw std::invalid_argument("multi-index dimension does not match path dimension");
    const MultiIndex total = alpha + beta;
    Accumulator<S> acc;
    for (std::size_t i = 0; i < total.dim(); ++i) {
      if (beta[i] == 0) continue;
      MultiIndex counts = total;
      counts[i] -= 1;
      acc.add(S(S(beta[i]) * one_form_(counts, static_cast<Letter>(i + 1))));
    }
    return acc.value();
  }

  // int_path P dQ.
  S integral(const Polynomial<S>& p, const Polynomial<S>& q) {
    const std::size_t d = view_.dimension();
    if (p.dim() != d || q.dim() != d) throw std::invalid_argument("polynomial dimension does not match path");
    if (p.is_zero() || q.is_zero()) return S(0);
    if (backend_ == MomentBackend::words) {
      const std::vector<S>& origin = view_.path().start();
      Polynomial<S> pr = p.rebased(origin);
      Polynomial<S> qr = q.rebased(origin);
      Accumulator<S> acc;
      for (const auto& [a, pc] : pr.terms())
        for (const auto& [b, qc] : qr.terms()) {
          if (b.is_zero()) continue;
          acc.add(S(pc * qc * monomial(a, b)));
        }
      return acc.value();
    }
    // Expanded about P's basepoint b; the table runs on exp(start - b) X.
    const std::vector<S>& base = p.basepoint();
    Polynomial<S> qb = q.rebased(base);
    const unsigned need = p.degree() + qb.degree();
    const ArrangementTable<S>& table = table_for_(base, need == 0 ? 0 : need - 1);
    Accumulator<S> acc;
    for (const auto& [a, pc] : p.terms())
      for (const auto& [b, qc] : qb.terms()) {
        if (b.is_zero()) continue;
        const MultiIndex total = a + b;
        for (std::size_t i = 0; i < d; ++i) {
          if (b[i] == 0) continue;
          MultiIndex counts = total;
          counts[i] -= 1;
          acc.add(S(pc * qc * S(b[i]) * table.symmetrized(counts, static_cast<Letter>(i + 1))));
        }
      }
    return acc.value();
  }

 private:
  S one_form_(const MultiIndex& counts, Letter terminal) {
    auto key = std::make_pair(counts, terminal);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    S value = pair(symmetrization<S>(counts).right_concat(terminal), view_);
    cache_.emplace(std::move(key), value);
    return value;
  }

  const ArrangementTable<S>& table_for_(const std::vector<S>& base, unsigned degree) {
    auto it = tables_.find(base);
    if (it == tables_.end() || it->second->max_degree() < degree) {
      std::vector<S> offset(base.size());
      for (std::size_t i = 0; i < base.size(); ++i) offset[i] = view_.path().start()[i] - base[i];
      auto table = std::make_unique<ArrangementTable<S>>(view_.path(), degree, std::move(offset), budget_);
      it = tables_.insert_or_assign(base, std::move(table)).first;
    }
    return *it->second;
  }

  const SignatureView<S>& view_;
  MomentBackend backend_;
  SignatureBudget budget_;
  std::map<std::pair<MultiIndex, Letter>, S> cache_;
  std::map<std::vector<S>, std::unique_ptr<ArrangementTable<S>>> tables_;
};

// int_path P dQ with the words backend.
template <Scalar S>
S polynomial_integral(const Polynomial<S>& p, const Polynomial<S>& q, const SignatureView<S>& view) {
  MomentEvaluator<S> eval(view);
  return eval.integral(p, q);
}

}  // namespace sigwind

#endif  // SIGWIND_MOMENTS_HPP
