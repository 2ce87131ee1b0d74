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
// Words over a d-letter alphabet and finite linear combinations of them
// (elements of the dual of the tensor algebra), together with the shuffle
// product and the symmetrization of a letter multiset.

#ifndef SIGWIND_TENSOR_WORDS_HPP
#define SIGWIND_TENSOR_WORDS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sigwind/scalar.hpp"

namespace sigwind {

using Letter = std::uint16_t;

// Letters are 1-based: letter i names the coordinate functional x_i.
class Word {
 public:
  explicit Word(std::size_t alphabet = 1) : alphabet_(alphabet) {
    if (alphabet_ == 0) throw std::invalid_argument("alphabet size must be positive");
  }

  Word(std::size_t alphabet, std::vector<Letter> letters) : alphabet_(alphabet), letters_(std::move(letters)) {
    if (alphabet_ == 0) throw std::invalid_argument("alphabet size must be positive");
    for (Letter l : letters_)
      if (l < 1 || l > alphabet_)
        throw std::invalid_argument("letter " + std::to_string(l) + " outside alphabet of size " +
                                    std::to_string(alphabet_));
  }

  Word(std::size_t alphabet, std::initializer_list<Letter> letters)
      : Word(alphabet, std::vector<Letter>(letters)) {}

  std::size_t alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }

  Word appended(Letter l) const {
    Word w(*this);
    w.push_back(l);
    return w;
  }

  void push_back(Letter l) {
    if (l < 1 || l > alphabet_) throw std::invalid_argument("letter outside alphabet");
    letters_.push_back(l);
  }

  // "1,2,1"; the empty word prints as "".
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(letters_[i]);
    }
    return s;
  }

  // Shorter words first, then lexicographic; iteration order over any
  // word-keyed map is therefore deterministic.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    if (auto c = std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                        b.letters_.begin(), b.letters_.end());
        c != 0)
      return c;
    return a.alphabet_ <=> b.alphabet_;
  }
  friend bool operator==(const Word& a, const Word& b) = default;

 private:
  std::size_t alphabet_;
  std::vector<Letter> letters_;
};

inline void require_same_alphabet(std::size_t a, std::size_t b) {
  if (a != b)
    throw std::invalid_argument("alphabet mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

inline Word concat_words(const Word& u, const Word& w) {
  require_same_alphabet(u.alphabet(), w.alphabet());
  std::vector<Letter> letters(u.letters().begin(), u.letters().end());
  letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  return Word(u.alphabet(), std::move(letters));
}

// Finite formal sum of words. Zero coefficients are never stored.
template <Scalar S>
class DualTensor {
 public:
  using Terms = std::map<Word, S>;

  explicit DualTensor(std::size_t alphabet) : alphabet_(alphabet) {}

  static DualTensor single(const Word& w, const S& c = S(1)) {
    DualTensor t(w.alphabet());
    t.add_term(w, c);
    return t;
  }

  std::size_t alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const Terms& terms() const noexcept { return terms_; }

  S coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? S(0) : it->second;
  }

  void add_term(const Word& w, const S& c) {
    require_same_alphabet(alphabet_, w.alphabet());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Sorted multiset of word lengths, one entry per stored term.
  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> out;
    out.reserve(terms_.size());
    for (const auto& [w, c] : terms_) out.push_back(w.size());
    return out;
  }

  // Sum of all coefficients.
  S mass() const {
    Accumulator<S> acc;
    for (const auto& [w, c] : terms_) acc.add(c);
    return acc.value();
  }

  DualTensor& operator+=(const DualTensor& o) {
    require_same_alphabet(alphabet_, o.alphabet_);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }

  DualTensor& operator-=(const DualTensor& o) {
    require_same_alphabet(alphabet_, o.alphabet_);
    for (const auto& [w, c] : o.terms_) add_term(w, S(-c));
    return *this;
  }

  DualTensor& operator*=(const S& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= k;
    return *this;
  }

  friend DualTensor operator+(DualTensor a, const DualTensor& b) { return a += b; }
  friend DualTensor operator-(DualTensor a, const DualTensor& b) { return a -= b; }
  friend DualTensor operator*(DualTensor a, const S& k) { return a *= k; }
  friend DualTensor operator*(const S& k, DualTensor a) { return a *= k; }

  // Every word w becomes w·suffix.
  DualTensor right_concat(const Word& suffix) const {
    DualTensor out(alphabet_);
    for (const auto& [w, c] : terms_) out.add_term(concat_words(w, suffix), c);
    return out;
  }

  DualTensor right_concat(Letter l) const { return right_concat(Word(alphabet_, {l})); }

  friend bool operator==(const DualTensor& a, const DualTensor& b) {
    return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t alphabet_;
  Terms terms_;
};

// Exponent vector alpha in N^d.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim) : exps_(dim, 0) {}
  MultiIndex(std::initializer_list<unsigned> e) : exps_(e) {}
  explicit MultiIndex(std::vector<unsigned> e) : exps_(std::move(e)) {}

  static MultiIndex unit(std::size_t dim, std::size_t i) {
    MultiIndex m(dim);
    m.exps_.at(i) = 1;
    return m;
  }

  std::size_t dim() const noexcept { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  std::span<const unsigned> exponents() const noexcept { return exps_; }

  unsigned total() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }
  bool is_zero() const { return total() == 0; }

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    require_same_alphabet(a.dim(), b.dim());
    MultiIndex r(a);
    for (std::size_t i = 0; i < r.dim(); ++i) r.exps_[i] += b.exps_[i];
    return r;
  }

  // Componentwise a <= b.
  bool divides(const MultiIndex& b) const {
    for (std::size_t i = 0; i < dim(); ++i)
      if (exps_[i] > b.exps_[i]) return false;
    return true;
  }

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<unsigned> exps_;
};

// All interleavings of u and w preserving the internal order of each, counted
// with multiplicity.
template <Scalar S = double>
DualTensor<S> shuffle(const Word& u, const Word& w) {
  require_same_alphabet(u.alphabet(), w.alphabet());
  const std::size_t d = u.alphabet();
  // table[i][j] = (prefix of u of length i) shuffle (prefix of w of length j)
  std::vector<std::vector<DualTensor<S>>> table(u.size() + 1,
                                                std::vector<DualTensor<S>>(w.size() + 1, DualTensor<S>(d)));
  table[0][0].add_term(Word(d), S(1));
  for (std::size_t i = 0; i <= u.size(); ++i) {
    for (std::size_t j = 0; j <= w.size(); ++j) {
      if (i == 0 && j == 0) continue;
      DualTensor<S>& cell = table[i][j];
      if (i > 0) cell += table[i - 1][j].right_concat(u[i - 1]);
      if (j > 0) cell += table[i][j - 1].right_concat(w[j - 1]);
    }
  }
  return table[u.size()][w.size()];
}

// Visits each distinct word with letter i occurring counts[i-1] times, in
// lexicographic order. There are |counts|! / prod counts[i]! of them.
template <class Fn>
void for_each_arrangement(const MultiIndex& counts, Fn&& fn) {
  std::vector<Letter> letters;
  letters.reserve(counts.total());
  for (std::size_t i = 0; i < counts.dim(); ++i)
    letters.insert(letters.end(), counts[i], static_cast<Letter>(i + 1));
  do {
    fn(Word(counts.dim(), letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
}

// Sum over all permutations sigma of the |counts| tensor factors of
// x_1^{(c_1)} (x) ... (x) x_d^{(c_d)}. Permutations fixing the word are
// collapsed: each distinct arrangement carries prod c_i!.
template <Scalar S = double>
DualTensor<S> symmetrization(const MultiIndex& counts) {
  DualTensor<S> out(counts.dim());
  S multiplicity(1);
  for (std::size_t i = 0; i < counts.dim(); ++i) multiplicity *= factorial<S>(counts[i]);
  for_each_arrangement(counts, [&](const Word& w) { out.add_term(w, multiplicity); });
  return out;
}

}  // namespace sigwind

#endif  // SIGWIND_TENSOR_WORDS_HPP
