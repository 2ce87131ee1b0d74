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
// Signatures of piecewise-linear paths.
//
// A segment with increment v has signature exp(v) = sum_k v^{(x)k}/k!, and the
// signature of a concatenation is the tensor product of the signatures (Chen).
// Three evaluators are provided:
//
//   DenseSignature   every coefficient up to a level; d^L storage.
//   SignatureView    one word at a time, memoized; O(m |w|^2) per word.
//   ArrangementTable sums of coordinates over all arrangements of a letter
//                    multiset followed by a fixed last letter; storage is
//                    polynomial in the degree.

#ifndef SIGWIND_SIGNATURE_HPP
#define SIGWIND_SIGNATURE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sigwind/errors.hpp"
#include "sigwind/scalar.hpp"
#include "sigwind/tensor_words.hpp"

namespace sigwind {

template <Scalar S>
class Polyline {
 public:
  using Point = std::vector<S>;

  Polyline(std::size_t dim, std::vector<Point> vertices) : dim_(dim), vertices_(std::move(vertices)) {
    if (dim_ == 0) throw std::invalid_argument("polyline dimension must be positive");
    if (vertices_.empty()) throw std::invalid_argument("polyline needs at least one vertex");
    for (const auto& p : vertices_)
      if (p.size() != dim_)
        throw std::invalid_argument("vertex has " + std::to_string(p.size()) + " coordinates, expected " +
                                    std::to_string(dim_));
  }

  explicit Polyline(std::vector<Point> vertices) : dim_(vertices.empty() ? 0 : vertices.front().size()) {
    *this = Polyline(dim_, std::move(vertices));
  }

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Point& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  const Point& start() const { return vertices_.front(); }
  const Point& end() const { return vertices_.back(); }

  bool is_closed() const { return vertices_.front() == vertices_.back(); }

  // Nonzero segment increments in order; repeated vertices contribute nothing.
  std::vector<Point> increments() const {
    std::vector<Point> out;
    for (std::size_t k = 1; k < vertices_.size(); ++k) {
      Point v(dim_);
      bool nonzero = false;
      for (std::size_t i = 0; i < dim_; ++i) {
        v[i] = vertices_[k][i] - vertices_[k - 1][i];
        if (v[i] != 0) nonzero = true;
      }
      if (nonzero) out.push_back(std::move(v));
    }
    return out;
  }

  Point increment() const {
    Point v(dim_);
    for (std::size_t i = 0; i < dim_; ++i) v[i] = end()[i] - start()[i];
    return v;
  }

  Polyline reversed() const {
    std::vector<Point> v(vertices_.rbegin(), vertices_.rend());
    return Polyline(dim_, std::move(v));
  }

  Polyline translated(std::span<const S> shift) const {
    if (shift.size() != dim_) throw std::invalid_argument("shift dimension mismatch");
    std::vector<Point> v = vertices_;
    for (auto& p : v)
      for (std::size_t i = 0; i < dim_; ++i) p[i] += shift[i];
    return Polyline(dim_, std::move(v));
  }

  // This path followed by `next`, translated so that it starts where this one ends.
  Polyline followed_by(const Polyline& next) const {
    if (next.dim_ != dim_) throw std::invalid_argument("polyline dimension mismatch");
    std::vector<Point> v = vertices_;
    for (std::size_t k = 1; k < next.vertices_.size(); ++k) {
      Point p(dim_);
      for (std::size_t i = 0; i < dim_; ++i) p[i] = end()[i] + (next.vertices_[k][i] - next.start()[i]);
      v.push_back(std::move(p));
    }
    return Polyline(dim_, std::move(v));
  }

  // Vertexwise image under the affine map p -> (<l_j, p> - c_j)_j.
  Polyline projected(const std::vector<Point>& functionals, const std::vector<S>& offsets) const {
    if (functionals.empty() || offsets.size() != functionals.size())
      throw std::invalid_argument("projection needs one offset per functional");
    for (const auto& l : functionals)
      if (l.size() != dim_) throw std::invalid_argument("functional dimension mismatch");
    std::vector<Point> out;
    out.reserve(vertices_.size());
    for (const auto& p : vertices_) {
      Point q(functionals.size());
      for (std::size_t j = 0; j < functionals.size(); ++j) {
        S acc(0);
        for (std::size_t i = 0; i < dim_; ++i) acc += functionals[j][i] * p[i];
        q[j] = acc - offsets[j];
      }
      out.push_back(std::move(q));
    }
    return Polyline(functionals.size(), std::move(out));
  }

  // Euclidean 1-variation.
  double length() const {
    double total = 0;
    for (std::size_t k = 1; k < vertices_.size(); ++k) {
      double s = 0;
      for (std::size_t i = 0; i < dim_; ++i) {
        double d = to_double(S(vertices_[k][i] - vertices_[k - 1][i]));
        s += d * d;
      }
      total += std::sqrt(s);
    }
    return total;
  }

  // 1-variation of the i-th coordinate (0-based), sum of |delta x_i|.
  S coordinate_variation(std::size_t i) const {
    S total(0);
    for (std::size_t k = 1; k < vertices_.size(); ++k) {
      S d = vertices_[k][i] - vertices_[k - 1][i];
      total += d < 0 ? S(-d) : d;
    }
    return total;
  }

 private:
  std::size_t dim_;
  std::vector<Point> vertices_;
};

// Signature truncated at `level`. Level k holds d^k coefficients; the word
// (l_1, ..., l_k) sits at index sum_j (l_j - 1) d^{k-j}.
template <Scalar S>
class DenseSignature {
 public:
  DenseSignature(std::size_t dim, std::size_t level) : dim_(dim), level_(level), levels_(level + 1) {
    if (dim_ == 0) throw std::invalid_argument("dimension must be positive");
    std::size_t n = 1;
    for (std::size_t k = 0; k <= level_; ++k) {
      levels_[k].assign(n, S(0));
      n *= dim_;
    }
  }

  static DenseSignature identity(std::size_t dim, std::size_t level) {
    DenseSignature x(dim, level);
    x.levels_[0][0] = S(1);
    return x;
  }

  // Total number of coefficients in levels 0..level, saturating on overflow.
  static std::size_t coefficient_count(std::size_t dim, std::size_t level) {
    const std::size_t cap = std::numeric_limits<std::size_t>::max();
    std::size_t total = 0, n = 1;
    for (std::size_t k = 0; k <= level; ++k) {
      if (total > cap - n) return cap;
      total += n;
      if (k < level && n > cap / dim) return cap;
      n *= dim;
    }
    return total;
  }

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t level() const noexcept { return level_; }
  std::span<const S> level_coefficients(std::size_t k) const { return levels_.at(k); }
  std::span<S> level_coefficients(std::size_t k) { return levels_.at(k); }

  std::size_t index_of(const Word& w) const {
    std::size_t idx = 0;
    for (Letter l : w.letters()) {
      if (l < 1 || l > dim_) throw std::invalid_argument("letter outside signature dimension");
      idx = idx * dim_ + (l - 1);
    }
    return idx;
  }

  const S& coefficient(const Word& w) const {
    if (w.size() > level_)
      throw std::out_of_range("word of length " + std::to_string(w.size()) + " beyond level " +
                              std::to_string(level_));
    return levels_[w.size()][index_of(w)];
  }

  S& coefficient(const Word& w) {
    return const_cast<S&>(static_cast<const DenseSignature&>(*this).coefficient(w));
  }

  friend bool operator==(const DenseSignature&, const DenseSignature&) = default;

 private:
  std::size_t dim_;
  std::size_t level_;
  std::vector<std::vector<S>> levels_;
};

struct SignatureBudget {
  std::size_t max_coefficients = std::size_t{1} << 26;
};

// exp(v) truncated: the coefficient of w is prod_j v_{w_j} / |w|!.
template <Scalar S>
DenseSignature<S> segment_signature(std::span<const S> v, std::size_t level) {
  const std::size_t d = v.size();
  DenseSignature<S> x = DenseSignature<S>::identity(d, level);
  for (std::size_t k = 1; k <= level; ++k) {
    auto prev = x.level_coefficients(k - 1);
    auto cur = x.level_coefficients(k);
    const S inv_k = S(1) / S(static_cast<long>(k));
    for (std::size_t p = 0; p < prev.size(); ++p) {
      if (prev[p] == 0) continue;
      for (std::size_t i = 0; i < d; ++i) cur[p * d + i] = prev[p] * v[i] * inv_k;
    }
  }
  return x;
}

template <Scalar S>
DenseSignature<S> segment_signature(const std::vector<S>& v, std::size_t level) {
  return segment_signature<S>(std::span<const S>(v), level);
}

// Truncated tensor product: <w, XY> = sum over splits w = uv of <u,X><v,Y>.
template <Scalar S>
DenseSignature<S> chen_product(const DenseSignature<S>& x, const DenseSignature<S>& y, std::size_t level) {
  if (x.dimension() != y.dimension()) throw std::invalid_argument("chen_product: dimension mismatch");
  if (level > x.level() || level > y.level()) throw std::invalid_argument("chen_product: level exceeds operands");
  const std::size_t d = x.dimension();
  DenseSignature<S> out(d, level);
  for (std::size_t k = 0; k <= level; ++k) {
    auto dst = out.level_coefficients(k);
    // split point j: prefix of length j from x, suffix of length k - j from y
    for (std::size_t j = 0; j <= k; ++j) {
      auto xs = x.level_coefficients(j);
      auto ys = y.level_coefficients(k - j);
      const std::size_t ns = ys.size();
      for (std::size_t p = 0; p < xs.size(); ++p) {
        if (xs[p] == 0) continue;
        const S& a = xs[p];
        for (std::size_t q = 0; q < ns; ++q) dst[p * ns + q] += a * ys[q];
      }
    }
  }
  return out;
}

template <Scalar S>
DenseSignature<S> polyline_signature(const Polyline<S>& path, std::size_t level, SignatureBudget budget = {}) {
  const std::size_t d = path.dimension();
  const std::size_t need = DenseSignature<S>::coefficient_count(d, level);
  if (need > budget.max_coefficients) throw SizeError(level, need, budget.max_coefficients);
  DenseSignature<S> x = DenseSignature<S>::identity(d, level);
  for (const auto& v : path.increments()) x = chen_product(x, segment_signature<S>(v, level), level);
  return x;
}

// Per-word signature coordinates, computed on demand and kept.
//
// For w = (w_1..w_n) the evaluator carries a_j = <w_1..w_j, X_{segments so far}>
// for every prefix and multiplies in one segment at a time:
//   a_j <- sum_{i<=j} a_i * prod_{l=i+1..j} v_{w_l} / (j-i)!
// Safe for concurrent readers; racing insertions store identical values.
template <Scalar S>
class SignatureView {
 public:
  explicit SignatureView(Polyline<S> path) : path_(std::move(path)), increments_(path_.increments()) {}

  SignatureView(const SignatureView& o) : path_(o.path_), increments_(o.increments_) {
    std::lock_guard lock(o.mu_);
    memo_ = o.memo_;
  }

  const Polyline<S>& path() const noexcept { return path_; }
  std::size_t dimension() const noexcept { return path_.dimension(); }

  S coordinate(const Word& w) const {
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    }
    for (Letter l : w.letters())
      if (l > path_.dimension())
        throw std::invalid_argument("letter " + std::to_string(l) + " beyond path dimension " +
                                    std::to_string(path_.dimension()));
    S value = compute_(w);
    std::lock_guard lock(mu_);
    return memo_.try_emplace(w, value).first->second;
  }

  std::size_t memo_size() const {
    std::lock_guard lock(mu_);
    return memo_.size();
  }

 private:
  S compute_(const Word& w) const {
    const std::size_t n = w.size();
    std::vector<S> a(n + 1, S(0));
    a[0] = S(1);
    for (const auto& v : increments_) {
      for (std::size_t j = n; j >= 1; --j) {
        S p(1);
        Accumulator<S> acc;
        acc.add(a[j]);
        for (std::size_t i = j; i-- > 0;) {
          p *= v[w[i] - 1];
          p /= S(static_cast<long>(j - i));
          if (a[i] != 0) acc.add(S(a[i] * p));
        }
        a[j] = acc.value();
      }
    }
    return a[n];
  }

  Polyline<S> path_;
  std::vector<std::vector<S>> increments_;
  mutable std::mutex mu_;
  mutable std::map<Word, S> memo_;
};

// sum over terms of coefficient * coordinate, in word order.
template <Scalar S>
S pair(const DualTensor<S>& t, const SignatureView<S>& view) {
  Accumulator<S> acc;
  for (const auto& [w, c] : t) acc.add(S(c * view.coordinate(w)));
  return acc.value();
}

// Pairing against a dense signature; words longer than its level are an error.
template <Scalar S>
S pair(const DualTensor<S>& t, const DenseSignature<S>& x) {
  Accumulator<S> acc;
  for (const auto& [w, c] : t) acc.add(S(c * x.coefficient(w)));
  return acc.value();
}

// For every letter multiset c with |c| <= max_degree and every terminal letter
// i, the sum over the distinct arrangements w of c of <w x_i, X>, computed by a
// Chen recursion on the letter counts alone:
//
//   A(c)   = sum_{w in arr(c)} <w, X>          segment: prod v^c / c!
//   B(c,i) = sum_{w in arr(c)} <w x_i, X>      segment: prod v^c / c! * v_i / (|c|+1)
//   (XY):  A(c) = sum_{e<=c} A_X(c-e) A_Y(e),  B(c,i) = B_X(c,i) + sum_{e<=c} A_X(c-e) B_Y(e,i)
//
// With a nonzero `offset` the recursion starts from A = exp(offset) instead of
// the identity while B starts at zero, so that B(c,i) equals
//   sum_{w in arr(c)} <w x_i, exp(offset) X> - <w x_i, exp(offset)>
//   = integral over the path of prod (y + offset)^c / c! dy_i,  y = path - path(0).
template <Scalar S>
class ArrangementTable {
 public:
  ArrangementTable(const Polyline<S>& path, unsigned max_degree, std::vector<S> offset = {},
                   SignatureBudget budget = {})
      : dim_(path.dimension()), degree_(max_degree) {
    if (offset.empty()) offset.assign(dim_, S(0));
    if (offset.size() != dim_) throw std::invalid_argument("offset dimension mismatch");
    std::size_t cells = 1;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (cells > budget.max_coefficients / (degree_ + 1)) throw SizeError(degree_, cells * (degree_ + 1), budget.max_coefficients);
      cells *= degree_ + 1;
    }
    if (cells * (dim_ + 1) > budget.max_coefficients) throw SizeError(degree_, cells * (dim_ + 1), budget.max_coefficients);
    stride_.resize(dim_);
    std::size_t s = 1;
    for (std::size_t i = 0; i < dim_; ++i) {
      stride_[i] = s;
      s *= degree_ + 1;
    }
    // cells with |c| <= degree
    std::vector<unsigned> c(dim_, 0);
    for (std::size_t idx = 0; idx < cells; ++idx) {
      unsigned total = 0;
      std::size_t r = idx;
      for (std::size_t i = 0; i < dim_; ++i) {
        c[i] = static_cast<unsigned>(r % (degree_ + 1));
        r /= degree_ + 1;
        total += c[i];
      }
      if (total <= degree_) cells_.push_back({idx, total});
    }

    a_.assign(cells, S(0));
    b_.assign(cells * dim_, S(0));
    // A at each vertex is group-like: prod p_i^{c_i} / c_i! with p the
    // offset point, so it is set in closed form rather than propagated.
    std::vector<S> p = std::move(offset);
    for (const auto& v : path.increments()) {
      set_group_like_(p);
      absorb_segment_(v);
      for (std::size_t i = 0; i < dim_; ++i) p[i] += v[i];
    }
    set_group_like_(p);
  }

  std::size_t dimension() const noexcept { return dim_; }
  unsigned max_degree() const noexcept { return degree_; }

  // sum over arrangements w of counts of <w x_terminal, .> (see class comment).
  const S& arrangement_sum(const MultiIndex& counts, Letter terminal) const {
    return b_[index_(counts) * dim_ + check_letter_(terminal)];
  }

  // prod counts_i! times arrangement_sum: the pairing with
  // symmetrization(counts) followed by x_terminal.
  S symmetrized(const MultiIndex& counts, Letter terminal) const {
    S m = arrangement_sum(counts, terminal);
    for (std::size_t i = 0; i < dim_; ++i) m *= factorial<S>(counts[i]);
    return m;
  }

  // sum over arrangements w of counts of <w, exp(offset) X>.
  const S& arrangement_sum(const MultiIndex& counts) const { return a_[index_(counts)]; }

 private:
  struct Cell {
    std::size_t index;
    unsigned total;
  };

  std::size_t check_letter_(Letter l) const {
    if (l < 1 || l > dim_) throw std::invalid_argument("terminal letter outside alphabet");
    return l - 1;
  }

  std::size_t index_(const MultiIndex& counts) const {
    if (counts.dim() != dim_) throw std::invalid_argument("letter counts dimension mismatch");
    if (counts.total() > degree_)
      throw std::out_of_range("letter counts of degree " + std::to_string(counts.total()) +
                              " beyond table degree " + std::to_string(degree_));
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dim_; ++i) idx += counts[i] * stride_[i];
    return idx;
  }

  S monomial_over_factorial_(std::size_t idx, const std::vector<S>& x) const {
    S r(1);
    for (std::size_t i = 0; i < dim_; ++i) {
      unsigned e = static_cast<unsigned>((idx / stride_[i]) % (degree_ + 1));
      if (e) r *= power(x[i], e) / factorial<S>(e);
    }
    return r;
  }

  void set_group_like_(const std::vector<S>& p) {
    for (const Cell& cell : cells_) a_[cell.index] = monomial_over_factorial_(cell.index, p);
  }

  void absorb_segment_(const std::vector<S>& v) {
    // pw[i][e] = v_i^e / e!
    std::vector<std::vector<S>> pw(dim_, std::vector<S>(degree_ + 1));
    for (std::size_t i = 0; i < dim_; ++i) {
      pw[i][0] = S(1);
      for (unsigned e = 1; e <= degree_; ++e) pw[i][e] = pw[i][e - 1] * v[i] / S(static_cast<long>(e));
    }
    std::vector<unsigned> c(dim_), e(dim_);
    std::vector<Accumulator<S>> bacc(dim_);
    for (const Cell& cell : cells_) {
      for (std::size_t i = 0; i < dim_; ++i) c[i] = static_cast<unsigned>((cell.index / stride_[i]) % (degree_ + 1));
      std::fill(e.begin(), e.end(), 0u);
      std::fill(bacc.begin(), bacc.end(), Accumulator<S>());
      // odometer over e <= c
      while (true) {
        std::size_t src = cell.index;
        unsigned etotal = 0;
        S w(1);
        bool zero = false;
        for (std::size_t i = 0; i < dim_; ++i) {
          src -= e[i] * stride_[i];
          etotal += e[i];
          if (e[i]) {
            if (pw[i][e[i]] == 0) {
              zero = true;
              break;
            }
            w *= pw[i][e[i]];
          }
        }
        if (!zero && a_[src] != 0) {
          S tb = a_[src] * w / S(static_cast<long>(etotal + 1));
          for (std::size_t i = 0; i < dim_; ++i)
            if (v[i] != 0) bacc[i].add(S(tb * v[i]));
        }
        std::size_t i = 0;
        for (; i < dim_; ++i) {
          if (e[i] < c[i]) {
            ++e[i];
            break;
          }
          e[i] = 0;
        }
        if (i == dim_) break;
      }
      for (std::size_t i = 0; i < dim_; ++i) {
        S& b = b_[cell.index * dim_ + i];
        bacc[i].add(b);
        b = bacc[i].value();
      }
    }
  }

  std::size_t dim_;
  unsigned degree_;
  std::vector<std::size_t> stride_;
  std::vector<Cell> cells_;
  std::vector<S> a_;
  std::vector<S> b_;
};

}  // namespace sigwind

#endif  // SIGWIND_SIGNATURE_HPP
