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

#ifndef SIGWIND_POLYNOMIAL_HPP
#define SIGWIND_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigwind/scalar.hpp"
#include "sigwind/tensor_words.hpp"

namespace sigwind {

// sum_alpha c_alpha (x - b)^alpha for a basepoint b in R^d.
template <Scalar S>
class Polynomial {
 public:
  using Terms = std::map<MultiIndex, S>;

  explicit Polynomial(std::size_t dim) : dim_(dim), basepoint_(dim, S(0)) {}
  Polynomial(std::size_t dim, std::vector<S> basepoint) : dim_(dim), basepoint_(std::move(basepoint)) {
    if (basepoint_.size() != dim_) throw std::invalid_argument("basepoint dimension mismatch");
  }

  static Polynomial constant(std::size_t dim, const S& c) {
    Polynomial p(dim);
    p.add_term(MultiIndex(dim), c);
    return p;
  }

  // x_i, 1-based.
  static Polynomial variable(std::size_t dim, std::size_t i) {
    if (i < 1 || i > dim) throw std::invalid_argument("variable index out of range");
    Polynomial p(dim);
    p.add_term(MultiIndex::unit(dim, i - 1), S(1));
    return p;
  }

  static Polynomial monomial(const MultiIndex& alpha, const S& c = S(1)) {
    Polynomial p(alpha.dim());
    p.add_term(alpha, c);
    return p;
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<S>& basepoint() const noexcept { return basepoint_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total());
    return d;
  }

  S coefficient(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? S(0) : it->second;
  }

  void add_term(const MultiIndex& m, const S& c) {
    if (m.dim() != dim_) throw std::invalid_argument("monomial dimension mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  S evaluate(std::span<const S> x) const {
    if (x.size() != dim_) throw std::invalid_argument("evaluation point dimension mismatch");
    std::vector<S> shifted(dim_);
    for (std::size_t i = 0; i < dim_; ++i) shifted[i] = x[i] - basepoint_[i];
    Accumulator<S> acc;
    for (const auto& [m, c] : terms_) {
      S t = c;
      for (std::size_t i = 0; i < dim_; ++i) t *= power(shifted[i], m[i]);
      acc.add(t);
    }
    return acc.value();
  }

  // Same function, expanded about a new basepoint.
  Polynomial rebased(const std::vector<S>& new_basepoint) const {
    if (new_basepoint.size() != dim_) throw std::invalid_argument("basepoint dimension mismatch");
    std::vector<S> delta(dim_);
    for (std::size_t i = 0; i < dim_; ++i) delta[i] = new_basepoint[i] - basepoint_[i];
    Polynomial out(dim_, new_basepoint);
    // (x - b)^alpha = ((x - b') + delta)^alpha, expanded coordinatewise.
    for (const auto& [m, c] : terms_) {
      std::vector<std::vector<S>> factors(dim_);
      for (std::size_t i = 0; i < dim_; ++i) {
        factors[i].resize(m[i] + 1);
        for (unsigned g = 0; g <= m[i]; ++g)
          factors[i][g] = binomial<S>(m[i], g) * power(delta[i], m[i] - g);
      }
      MultiIndex gamma(dim_);
      expand_(out, factors, gamma, 0, c);
    }
    return out;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    const Polynomial& rhs = o.basepoint_ == basepoint_ ? o : o.rebased(basepoint_);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
  Polynomial& operator*=(const S& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= k;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const S& k) { return a *= k; }
  friend Polynomial operator*(const S& k, Polynomial a) { return a *= k; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("polynomial dimension mismatch");
    const Polynomial& rhs = b.basepoint_ == a.basepoint_ ? b : b.rebased(a.basepoint_);
    Polynomial out(a.dim_, a.basepoint_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma + mb, ca * cb);
    return out;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(dim_, S(1)).rebased(basepoint_);
    Polynomial base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.basepoint_ == b.basepoint_ && a.terms_ == b.terms_;
  }

 private:
  void expand_(Polynomial& out, const std::vector<std::vector<S>>& factors, MultiIndex& gamma, std::size_t i,
               const S& c) const {
    if (i == dim_) {
      out.add_term(gamma, c);
      return;
    }
    for (unsigned g = 0; g < factors[i].size(); ++g) {
      if (factors[i][g] == 0) continue;
      gamma[i] = g;
      expand_(out, factors, gamma, i + 1, S(c * factors[i][g]));
    }
    gamma[i] = 0;
  }

  std::size_t dim_;
  std::vector<S> basepoint_;
  Terms terms_;
};

}  // namespace sigwind

#endif  // SIGWIND_POLYNOMIAL_HPP
