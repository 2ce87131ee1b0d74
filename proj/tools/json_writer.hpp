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
// Minimal streaming JSON writer. Doubles are printed with 17 significant
// digits; NaN and infinities become null.

#ifndef SIGWIND_TOOLS_JSON_WRITER_HPP
#define SIGWIND_TOOLS_JSON_WRITER_HPP

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace sigwind::cli {

class JsonWriter {
 public:
  JsonWriter& begin_object() { return open_('{'); }
  JsonWriter& end_object() { return close_('}'); }
  JsonWriter& begin_array() { return open_('['); }
  JsonWriter& end_array() { return close_(']'); }

  JsonWriter& key(std::string_view k) {
    comma_();
    string_(k);
    out_ += ": ";
    after_key_ = true;
    return *this;
  }

  JsonWriter& value(double x) {
    comma_();
    if (!std::isfinite(x)) {
      out_ += "null";
    } else {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out_ += buf;
    }
    return *this;
  }
  JsonWriter& value(long long x) {
    comma_();
    out_ += std::to_string(x);
    return *this;
  }
  JsonWriter& value(long x) { return value(static_cast<long long>(x)); }
  JsonWriter& value(int x) { return value(static_cast<long long>(x)); }
  JsonWriter& value(unsigned long x) {
    comma_();
    out_ += std::to_string(x);
    return *this;
  }
  JsonWriter& value(unsigned x) { return value(static_cast<unsigned long>(x)); }
  JsonWriter& value(bool b) {
    comma_();
    out_ += b ? "true" : "false";
    return *this;
  }
  JsonWriter& value(std::string_view s) {
    comma_();
    string_(s);
    return *this;
  }
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& null() {
    comma_();
    out_ += "null";
    return *this;
  }

  const std::string& str() const noexcept { return out_; }

 private:
  JsonWriter& open_(char c) {
    comma_();
    out_ += c;
    first_.push_back(true);
    return *this;
  }
  JsonWriter& close_(char c) {
    first_.pop_back();
    out_ += c;
    return *this;
  }
  void comma_() {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    if (!first_.empty()) {
      if (!first_.back()) out_ += ", ";
      first_.back() = false;
    }
  }
  void string_(std::string_view s) {
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out_ += buf;
          } else {
            out_ += c;
          }
      }
    }
    out_ += '"';
  }

  std::string out_;
  std::vector<bool> first_;
  bool after_key_ = false;
};

}  // namespace sigwind::cli

#endif  // SIGWIND_TOOLS_JSON_WRITER_HPP
