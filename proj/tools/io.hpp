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
// Input parsing for the command-line tool: polylines (CSV or JSON), number
// lists, polynomial expressions and complex numbers.

#ifndef SIGWIND_TOOLS_IO_HPP
#define SIGWIND_TOOLS_IO_HPP

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sigwind/polynomial.hpp"
#include "sigwind/scalar.hpp"
#include "sigwind/signature.hpp"

namespace sigwind::cli {

// Malformed user input; reported with exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <Scalar S>
S parse_number(const std::string& text, std::string_view what) {
  try {
    return parse_scalar<S>(trim(text));
  } catch (const std::exception&) {
    throw InputError("cannot parse " + std::string(what) + " '" + text + "'");
  }
}

// "1,0,0.5" -> vector.
template <Scalar S>
std::vector<S> parse_vector(const std::string& text, std::string_view what) {
  std::vector<S> out;
  for (const auto& field : split(text, ',')) out.push_back(parse_number<S>(field, what));
  return out;
}

inline MultiIndex parse_multi_index(const std::string& text, std::string_view what) {
  std::vector<unsigned> e;
  for (const auto& field : split(text, ',')) {
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(field, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != field.size() || field.empty() || v < 0)
      throw InputError("cannot parse " + std::string(what) + " entry '" + field + "' (need a nonnegative integer)");
    e.push_back(static_cast<unsigned>(v));
  }
  return MultiIndex(std::move(e));
}

namespace detail {

template <Scalar S>
S json_number(const nlohmann::json& v) {
  if (v.is_number_integer()) return S(static_cast<long>(v.get<long long>()));
  if (v.is_number()) return from_double<S>(v.get<double>());
  if (v.is_string()) return parse_number<S>(v.get<std::string>(), "coordinate");
  throw InputError("vertex coordinates must be numbers");
}

template <Scalar S>
Polyline<S> polyline_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON input: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw InputError("JSON input needs a \"vertices\" array");
  std::vector<std::vector<S>> vertices;
  for (const auto& row : doc["vertices"]) {
    if (!row.is_array()) throw InputError("each vertex must be an array of coordinates");
    std::vector<S> p;
    for (const auto& x : row) p.push_back(json_number<S>(x));
    vertices.push_back(std::move(p));
  }
  if (vertices.empty()) throw InputError("input has no vertices");
  std::size_t dim = vertices.front().size();
  if (doc.contains("dimension")) {
    if (!doc["dimension"].is_number_unsigned()) throw InputError("\"dimension\" must be a positive integer");
    dim = doc["dimension"].get<std::size_t>();
  }
  try {
    return Polyline<S>(dim, std::move(vertices));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

template <Scalar S>
Polyline<S> polyline_from_csv(const std::string& text) {
  std::vector<std::vector<S>> vertices;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<S> p;
    for (const auto& field : split(t, ','))
      p.push_back(parse_number<S>(field, "coordinate on line " + std::to_string(lineno)));
    if (!vertices.empty() && p.size() != vertices.front().size())
      throw InputError("line " + std::to_string(lineno) + " has " + std::to_string(p.size()) + " columns, expected " +
                       std::to_string(vertices.front().size()));
    vertices.push_back(std::move(p));
  }
  if (vertices.empty()) throw InputError("input has no vertices");
  return Polyline<S>(std::move(vertices));
}

}  // namespace detail

// CSV (one vertex per line, optional '#' lines) or {"dimension", "vertices"}.
template <Scalar S>
Polyline<S> parse_polyline(const std::string& text) {
  const std::string t = trim(text);
  if (!t.empty() && t[0] == '{') return detail::polyline_from_json<S>(t);
  return detail::polyline_from_csv<S>(t);
}

template <Scalar S>
Polyline<S> read_polyline(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open input file '" + file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polyline<S>(buf.str());
}

// Polynomial expressions in x1..xd:  numbers, x<i>, + - * ^ and parentheses,
// e.g. "(x1 - 0.5)^2 + 3*x2*x3".
template <Scalar S>
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::size_t dim) : text_(text), dim_(dim) {}

  Polynomial<S> parse() {
    Polynomial<S> p = expr_();
    skip_();
    if (pos_ != text_.size()) fail_("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  Polynomial<S> expr_() {
    Polynomial<S> acc = term_();
    while (true) {
      skip_();
      if (eat_('+'))
        acc += term_();
      else if (eat_('-'))
        acc -= term_();
      else
        return acc;
    }
  }

  Polynomial<S> term_() {
    Polynomial<S> acc = unary_();
    while (true) {
      skip_();
      if (eat_('*'))
        acc = acc * unary_();
      else
        return acc;
    }
  }

  Polynomial<S> unary_() {
    skip_();
    if (eat_('-')) return -unary_();
    if (eat_('+')) return unary_();
    return power_();
  }

  Polynomial<S> power_() {
    Polynomial<S> base = atom_();
    skip_();
    if (eat_('^')) {
      skip_();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail_("exponent must be a nonnegative integer");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial<S> atom_() {
    skip_();
    if (pos_ >= text_.size()) fail_("unexpected end of expression");
    if (eat_('(')) {
      Polynomial<S> p = expr_();
      skip_();
      if (!eat_(')')) fail_("missing ')'");
      return p;
    }
    const char c = text_[pos_];
    if (c == 'x' || c == 'X') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail_("variable needs an index, e.g. x1");
      const std::size_t i = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (i < 1 || i > dim_) fail_("variable x" + std::to_string(i) + " outside dimension " + std::to_string(dim_));
      return Polynomial<S>::variable(dim_, i);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size()) {
        const char d = text_[pos_];
        const bool exp_sign = (d == '+' || d == '-') && pos_ > start && (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E');
        if (std::isdigit(static_cast<unsigned char>(d)) || d == '.' || d == 'e' || d == 'E' || d == '/' || exp_sign)
          ++pos_;
        else
          break;
      }
      return Polynomial<S>::constant(dim_, parse_number<S>(std::string(text_.substr(start, pos_ - start)), "number"));
    }
    fail_("unexpected '" + std::string(1, c) + "'");
  }

  void skip_() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat_(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail_(const std::string& msg) const {
    throw InputError("polynomial '" + std::string(text_) + "' at position " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  std::size_t dim_;
  std::size_t pos_ = 0;
};

template <Scalar S>
Polynomial<S> parse_polynomial(std::string_view text, std::size_t dim) {
  return PolynomialParser<S>(text, dim).parse();
}

// "0.5", "-0.5+0.3i", "2i", "-i".
inline Complex parse_complex(const std::string& raw) {
  std::string t;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw InputError("empty complex number");
  auto num = [&](const std::string& s) -> double {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw InputError("cannot parse complex number '" + raw + "'");
    return v;
  };
  if (t.back() != 'i' && t.back() != 'j') return {num(t), 0.0};
  t.pop_back();
  // split at the last sign that is not the leading one or part of an exponent
  std::size_t split_at = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;)
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split_at = k;
      break;
    }
  if (split_at == std::string::npos) return {0.0, num(t)};
  return {num(t.substr(0, split_at)), num(t.substr(split_at))};
}

}  // namespace sigwind::cli

#endif  // SIGWIND_TOOLS_IO_HPP
