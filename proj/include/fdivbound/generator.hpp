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

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "fdivbound/error.hpp"
#include "fdivbound/extended_real.hpp"

namespace fdivbound {

/// Largest |f(1)| a custom generator may have.
inline constexpr double kAnchorTolerance = 1e-12;
/// Number of midpoint-convexity samples drawn for custom generators.
inline constexpr int kConvexitySamples = 64;

/// A convex f on [0, inf) with f(1) = 0, together with its boundary limits
/// f(0+) and lim_{t->inf} f(t)/t. Both limits may be +inf, never -inf.
class Generator {
 public:
  using Fn = std::function<double(double)>;

  const std::string& name() const noexcept { return name_; }
  ExtendedReal f_at_zero() const noexcept { return f_at_zero_; }
  ExtendedReal slope_at_infinity() const noexcept { return slope_at_infinity_; }

  /// f(t) for t in (0, inf).
  double eval(double t) const { return fn_(t); }
  double operator()(double t) const { return fn_(t); }

  /// f(t) for t in [0, inf); t = 0 resolves to the stored right limit.
  ExtendedReal value_at(double t) const {
    if (t == 0.0) return f_at_zero_;
    if (!(t > 0.0) || !std::isfinite(t))
      throw Error(Errc::InvalidParams, "generator argument must lie in [0, inf)");
    return ExtendedReal(fn_(t));
  }

  static Generator make_unchecked(Fn fn, ExtendedReal f_at_zero, ExtendedReal slope,
                                  std::string name) {
    if (f_at_zero.is_neg_inf() || slope.is_neg_inf())
      throw Error(Errc::InvalidParams, "generator limits may not be -inf");
    Generator g;
    g.fn_ = std::move(fn);
    g.f_at_zero_ = f_at_zero;
    g.slope_at_infinity_ = slope;
    g.name_ = std::move(name);
    return g;
  }

 private:
  Generator() = default;

  Fn fn_;
  ExtendedReal f_at_zero_;
  ExtendedReal slope_at_infinity_;
  std::string name_;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline double unit_from_bits(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline std::string format_alpha(double alpha) { return format_extended(alpha, 17); }

}  // namespace detail

/// Relative entropy, f(t) = t log t (nats).
inline Generator kl_generator() {
  return Generator::make_unchecked([](double t) { return t * std::log(t); }, 0.0,
                                   ExtendedReal::inf(), "kl");
}

/// Total variation, f(t) = |t - 1| / 2.
inline Generator tv_generator() {
  return Generator::make_unchecked([](double t) { return 0.5 * std::abs(t - 1.0); }, 0.5, 0.5, "tv");
}

/// Chi-square in its Hellinger-2 form, f(t) = t^2 - 1.
inline Generator chi2_generator() {
  return Generator::make_unchecked([](double t) { return t * t - 1.0; }, -1.0, ExtendedReal::inf(),
                                   "chi2");
}

/// Hellinger divergence of order alpha, f(t) = (t^alpha - 1) / (alpha - 1).
inline Generator hellinger_generator(double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha))
    throw Error(Errc::InvalidAlpha, "alpha must lie in (0,1) or (1,inf), got " + detail::format_alpha(alpha));
  const ExtendedReal f0 = 1.0 / (1.0 - alpha);
  const ExtendedReal slope = alpha > 1.0 ? ExtendedReal::inf() : ExtendedReal(0.0);
  return Generator::make_unchecked(
      [alpha](double t) { return (std::pow(t, alpha) - 1.0) / (alpha - 1.0); }, f0, slope,
      "hellinger:" + detail::format_alpha(alpha));
}

/// Wraps a user-supplied convex f. Midpoint convexity and then the anchor
/// f(1) = 0 are sample-checked on kConvexitySamples deterministic
/// log-uniform pairs in (1e-6, 1e6); this catches mistakes, it proves nothing.
inline Generator custom_generator(Generator::Fn f, ExtendedReal f_at_zero,
                                  ExtendedReal slope_at_infinity, std::string name) {
  std::uint64_t state = 0x5EEDC0FFEEULL;
  const double lo = std::log(1e-6);
  const double hi = std::log(1e6);
  for (int i = 0; i < kConvexitySamples; ++i) {
    const double s = std::exp(lo + (hi - lo) * detail::unit_from_bits(detail::splitmix64(state)));
    const double u = std::exp(lo + (hi - lo) * detail::unit_from_bits(detail::splitmix64(state)));
    const double fs = f(s);
    const double fu = f(u);
    const double fmid = f(0.5 * (s + u));
    if (!std::isfinite(fs) || !std::isfinite(fu) || !std::isfinite(fmid))
      throw Error(Errc::FailsConvexitySample, name + ": f is not finite on (0, inf)");
    const double tol = 1e-9 * (1.0 + std::abs(fs) + std::abs(fu));
    if (fmid > 0.5 * (fs + fu) + tol)
      throw Error(Errc::FailsConvexitySample,
                  name + ": midpoint convexity fails between " + format_extended(s) + " and " +
                      format_extended(u));
  }
  const double anchor = f(1.0);
  if (!(std::abs(anchor) <= kAnchorTolerance))
    throw Error(Errc::FailsAnchorCheck, name + ": f(1) = " + format_extended(anchor));
  return Generator::make_unchecked(std::move(f), f_at_zero, slope_at_infinity, std::move(name));
}

}  // namespace fdivbound
