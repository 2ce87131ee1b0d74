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
// Scalar modes: binary floating point with compensated summation, or exact
// GMP rationals. Every algorithm in the library is a template over one of
// these; the mode is fixed for a whole computation.

#ifndef SIGWIND_SCALAR_HPP
#define SIGWIND_SCALAR_HPP

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace sigwind {

using Rational = mpq_class;
using Complex = std::complex<double>;

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static double from_double(double x) { return x; }
  static double to_double(double x) { return x; }
  // Decimal literal, or "p/q".
  static double parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos)
      return parse(text.substr(0, slash)) / parse(text.substr(slash + 1));
    std::string s(text);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number: '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
    return v;
  }
};

template <>
struct ScalarTraits<long double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "long double";
  static long double from_double(double x) { return x; }
  static double to_double(long double x) { return static_cast<double>(x); }
  static long double parse(std::string_view text) {
    std::string s(text);
    std::size_t used = 0;
    long double v = 0.0L;
    try {
      v = std::stold(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number: '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
    return v;
  }
};

namespace detail {

inline mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Exact value of a decimal literal such as "-1.25e-3", or of "p/q".
inline Rational parse_rational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("not a number: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num / den);
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw bad();
  long exponent = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw bad();
    std::string e(text.substr(i + 1));
    std::size_t used = 0;
    try {
      exponent = std::stol(e, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != e.size()) throw bad();
  }
  mpz_class numerator(digits, 10);
  long shift = exponent - scale;
  Rational r;
  if (shift >= 0) {
    r = Rational(numerator * pow10(static_cast<unsigned long>(shift)));
  } else {
    r = Rational(numerator, pow10(static_cast<unsigned long>(-shift)));
    r.canonicalize();
  }
  return negative ? Rational(-r) : r;
}

}  // namespace detail

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";
  // Exact binary value of x.
  static Rational from_double(double x) { return Rational(x); }
  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational parse(std::string_view text) { return detail::parse_rational(text); }
};

template <class S>
concept Scalar = requires { ScalarTraits<S>::exact; };

template <Scalar S>
double to_double(const S& x) {
  return ScalarTraits<S>::to_double(x);
}

template <Scalar S>
S from_double(double x) {
  return ScalarTraits<S>::from_double(x);
}

template <Scalar S>
S parse_scalar(std::string_view text) {
  return ScalarTraits<S>::parse(text);
}

template <Scalar S>
S factorial(unsigned n) {
  S r(1);
  for (unsigned i = 2; i <= n; ++i) r *= S(i);
  return r;
}

template <Scalar S>
S binomial(unsigned n, unsigned k) {
  if (k > n) return S(0);
  S r(1);
  for (unsigned i = 1; i <= k; ++i) {
    r *= S(n - k + i);
    r /= S(i);
  }
  return r;
}

template <Scalar S>
S power(const S& base, unsigned e) {
  S r(1);
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

// Running sum. Floating-point modes use Neumaier's compensated summation;
// exact modes add directly.
template <class T>
class Accumulator {
 public:
  Accumulator() : sum_(0), comp_(0) {}

  void add(const T& x) {
    if constexpr (std::is_floating_point_v<T>) {
      T t = sum_ + x;
      if (std::abs(sum_) >= std::abs(x))
        comp_ += (sum_ - t) + x;
      else
        comp_ += (x - t) + sum_;
      sum_ = t;
    } else if constexpr (is_complex<T>::value) {
      re_.add(x.real());
      im_.add(x.imag());
    } else {
      sum_ += x;
    }
  }

  Accumulator& operator+=(const T& x) {
    add(x);
    return *this;
  }

  T value() const {
    if constexpr (std::is_floating_point_v<T>) {
      return sum_ + comp_;
    } else if constexpr (is_complex<T>::value) {
      return T(re_.value(), im_.value());
    } else {
      return sum_;
    }
  }

 private:
  struct Empty {
    void add(double) {}
    double value() const { return 0; }
  };
  using Part = std::conditional_t<is_complex<T>::value, Accumulator<double>, Empty>;
  using Plain = std::conditional_t<is_complex<T>::value, double, T>;

  Plain sum_;
  Plain comp_;
  [[no_unique_address]] Part re_{};
  [[no_unique_address]] Part im_{};
};

}  // namespace sigwind

#endif  // SIGWIND_SCALAR_HPP
