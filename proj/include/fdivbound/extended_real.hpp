// Copyright 2026 The fdivbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <compare>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "fdivbound/error.hpp"

namespace fdivbound {

/// A value in [-inf, +inf]. NaN is never stored.
///
/// Arithmetic that would be undefined on the extended line ((+inf) + (-inf),
/// 0 * inf, inf / inf) raises Errc::UndefinedArithmetic instead of producing
/// NaN. The one sanctioned exception is mul_absorbing(), which treats a zero
/// weight as annihilating an infinite value inside divergence sums.
class ExtendedReal {
 public:
  constexpr ExtendedReal() noexcept = default;

  // Implicit on purpose: finite doubles are the common case.
  ExtendedReal(double v) : v_(v) {  // NOLINT(google-explicit-constructor)
    if (std::isnan(v)) throw Error(Errc::UndefinedArithmetic, "NaN is not an extended real");
  }

  static ExtendedReal inf() noexcept { return from_raw(std::numeric_limits<double>::infinity()); }
  static ExtendedReal neg_inf() noexcept {
    return from_raw(-std::numeric_limits<double>::infinity());
  }

  bool is_finite() const noexcept { return std::isfinite(v_); }
  bool is_pos_inf() const noexcept { return v_ == std::numeric_limits<double>::infinity(); }
  bool is_neg_inf() const noexcept { return v_ == -std::numeric_limits<double>::infinity(); }

  /// Raw value; infinities map to IEEE infinities.
  double value() const noexcept { return v_; }

  /// Throws unless finite.
  double finite_value() const {
    if (!is_finite()) throw Error(Errc::UndefinedArithmetic, "expected a finite value");
    return v_;
  }

  friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b) {
    if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
      throw Error(Errc::UndefinedArithmetic, "(+inf) + (-inf)");
    return from_raw(a.v_ + b.v_);
  }
  friend ExtendedReal operator-(ExtendedReal a) noexcept { return from_raw(-a.v_); }
  friend ExtendedReal operator-(ExtendedReal a, ExtendedReal b) { return a + (-b); }

  friend ExtendedReal operator*(ExtendedReal a, ExtendedReal b) {
    if ((a.v_ == 0.0 && !b.is_finite()) || (b.v_ == 0.0 && !a.is_finite()))
      throw Error(Errc::UndefinedArithmetic, "0 * inf");
    return from_raw(a.v_ * b.v_);
  }

  friend ExtendedReal operator/(ExtendedReal a, ExtendedReal b) {
    if (!a.is_finite() && !b.is_finite()) throw Error(Errc::UndefinedArithmetic, "inf / inf");
    if (b.v_ == 0.0) throw Error(Errc::UndefinedArithmetic, "division by zero");
    return from_raw(a.v_ / b.v_);
  }

  ExtendedReal& operator+=(ExtendedReal o) { return *this = *this + o; }

  /// weight * x with 0 * (+-inf) = 0. Only for terms of a divergence sum
  /// whose vanishing weight removes them from the support.
  static ExtendedReal mul_absorbing(double weight, ExtendedReal x) {
    if (weight == 0.0) return ExtendedReal(0.0);
    return ExtendedReal(weight) * x;
  }

  friend bool operator==(ExtendedReal a, ExtendedReal b) noexcept { return a.v_ == b.v_; }
  friend std::partial_ordering operator<=>(ExtendedReal a, ExtendedReal b) noexcept {
    return a.v_ <=> b.v_;
  }

 private:
  static ExtendedReal from_raw(double v) noexcept {
    ExtendedReal r;
    r.v_ = v;
    return r;
  }

  double v_ = 0.0;
};

/// Shortest of "inf", "-inf" or a decimal with `significant_digits` digits.
inline std::string format_extended(ExtendedReal x, int significant_digits = 17) {
  if (x.is_pos_inf()) return "inf";
  if (x.is_neg_inf()) return "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x.value(), std::chars_format::general,
                           significant_digits);
  return std::string(buf, res.ptr);
}

/// Accepts "inf", "+inf", "infinity", "-inf" (any case) or a decimal number.
inline std::optional<ExtendedReal> parse_extended(std::string_view text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "inf" || lower == "+inf" || lower == "infinity" || lower == "+infinity")
    return ExtendedReal::inf();
  if (lower == "-inf" || lower == "-infinity") return ExtendedReal::neg_inf();
  std::string_view body = lower;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc() || ptr != body.data() + body.size() || !std::isfinite(v)) return std::nullopt;
  return ExtendedReal(v);
}

}  // namespace fdivbound
