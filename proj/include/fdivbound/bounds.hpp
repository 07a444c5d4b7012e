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

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

#include "fdivbound/error.hpp"
#include "fdivbound/extended_real.hpp"
#include "fdivbound/generator.hpp"
#include "fdivbound/params.hpp"

namespace fdivbound {

/// Relative slack allowed on delta <= tv_cap when a bound is evaluated at
/// parameters measured from a concrete pair, which can overshoot the cap by
/// a few ulps.
inline constexpr double kCapSlack = 1e-12;

enum class Formula {
  Theorem1,
  Corollary1,
  Corollary2,
  KlAb,
  Verdu,
  Renyi,
  Simic,
  SasonChi2,
  SasonRenyi,
};

constexpr std::string_view to_string(Formula f) noexcept {
  switch (f) {
    case Formula::Theorem1: return "theorem-1";
    case Formula::Corollary1: return "corollary-1";
    case Formula::Corollary2: return "corollary-2";
    case Formula::KlAb: return "kl-ab";
    case Formula::Verdu: return "verdu";
    case Formula::Renyi: return "renyi";
    case Formula::Simic: return "simic";
    case Formula::SasonChi2: return "sason-chi2";
    case Formula::SasonRenyi: return "sason-renyi";
  }
  return "unknown";
}

struct BoundReport {
  ExtendedReal bound;
  ClassParams params;
  std::string generator_name;
  Formula formula = Formula::Theorem1;
};

/// Largest total variation compatible with ratio extremes (m, M):
/// (M - 1)(1 - m) / (M - m), which is 1 - m at M = inf and 0 at m = M = 1.
inline double tv_cap(double m, ExtendedReal M) {
  if (!(m >= 0.0 && m <= 1.0) || !(M >= ExtendedReal(1.0)))
    throw Error(Errc::InvalidParams, "tv_cap needs 0 <= m <= 1 <= M");
  if (M.is_pos_inf()) return 1.0 - m;
  const double big = M.value();
  if (m == 1.0 || big == 1.0) return 0.0;
  return (big - 1.0) * (1.0 - m) / (big - m);
}

namespace detail {

inline bool feasible_with_slack(const ClassParams& params, double slack) {
  params.validate();
  if (params.m == 1.0 && params.M == ExtendedReal(1.0)) return params.delta == 0.0;
  if (!(params.m < 1.0 && params.M > ExtendedReal(1.0))) return false;
  return params.delta > 0.0 && params.delta <= tv_cap(params.m, params.M) * (1.0 + slack);
}

inline void require_feasible(const ClassParams& params) {
  if (!feasible_with_slack(params, kCapSlack))
    throw Error(Errc::Infeasible, "A(delta=" + format_extended(params.delta) + ", m=" +
                                      format_extended(params.m) + ", M=" + format_extended(params.M) +
                                      ") is empty");
}

inline void require_finite_M(const ClassParams& params) {
  if (params.M.is_pos_inf())
    throw Error(Errc::UnboundedM, "M = inf: use vajda_bound (or kl_bound_ab with b = inf)");
}

inline void require_alpha(double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha))
    throw Error(Errc::InvalidAlpha, "alpha must lie in (0,1) or (1,inf)");
}

/// log(x) / (x - 1), continuously extended: 1 at x = 1, 0 at x = inf.
/// A two-term series is used within 1e-8 of 1.
inline double log_ratio(double x) {
  if (std::isinf(x)) return 0.0;
  const double h = x - 1.0;
  if (std::abs(h) < 1e-8) return 1.0 - 0.5 * h;
  return std::log(x) / h;
}

/// (1 - x^alpha) / (1 - x) and (x^alpha - 1)/(x - 1): the chord slope of
/// t^alpha through t = 1.
inline double power_slope(double x, double alpha) {
  const double h = x - 1.0;
  if (std::abs(h) < 1e-8) return alpha + 0.5 * alpha * (alpha - 1.0) * h;
  return std::expm1(alpha * std::log(x)) / h;
}

}  // namespace detail

/// True iff A(delta, m, M) is nonempty: either m = M = 1 with delta = 0, or
/// m < 1 < M with 0 < delta <= tv_cap(m, M).
inline bool feasible(const ClassParams& params) { return detail::feasible_with_slack(params, 0.0); }

/// Optimal upper bound on D_f over A(delta, m, M):
///   delta * ( f(m)/(1 - m) + f(M)/(M - 1) ).
/// m = 0 uses f(0+). m = 1 or M = 1 gives 0. M must be finite.
inline ExtendedReal theorem1_bound(const Generator& gen, const ClassParams& params) {
  params.validate();
  detail::require_finite_M(params);
  detail::require_feasible(params);
  if (params.m == 1.0 || params.M == ExtendedReal(1.0) || params.delta == 0.0) return 0.0;
  const double big = params.M.value();
  const ExtendedReal lower = gen.value_at(params.m) / ExtendedReal(1.0 - params.m);
  const ExtendedReal upper = ExtendedReal(gen.eval(big) / (big - 1.0));
  return ExtendedReal(params.delta) * (lower + upper);
}

/// Optimal upper bound over B(m, M) (any delta):
///   ((M - 1) f(m) + (1 - m) f(M)) / (M - m).
inline ExtendedReal corollary1_bound(const Generator& gen, double m, ExtendedReal M) {
  const ClassParams params{0.0, m, M};
  params.validate();
  detail::require_finite_M(params);
  if (m == 1.0 || M == ExtendedReal(1.0)) return 0.0;
  const double big = M.value();
  const ExtendedReal lower = ExtendedReal(big - 1.0) * gen.value_at(m);
  const ExtendedReal upper = ExtendedReal((1.0 - m) * gen.eval(big));
  return (lower + upper) / ExtendedReal(big - m);
}

/// Optimal upper bound over all pairs at total variation delta:
///   delta * ( f(0+) + lim f(t)/t ).
inline ExtendedReal vajda_bound(const Generator& gen, double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw Error(Errc::InvalidParams, "delta must lie in [0, 1]");
  if (delta == 0.0) return 0.0;
  return ExtendedReal(delta) * (gen.f_at_zero() + gen.slope_at_infinity());
}

/// Relative-entropy bound in terms of a = 1/M and b = 1/m:
///   delta * ( log(a)/(a - 1) + log(b)/(1 - b) ).
/// b = inf (m = 0) drops the second term; that limit is the Verdu form.
inline ExtendedReal kl_bound_ab(double delta, double a, ExtendedReal b) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw Error(Errc::InvalidParams, "delta must lie in [0, 1]");
  if (!(a > 0.0 && a <= 1.0) || !(b >= ExtendedReal(1.0)))
    throw Error(Errc::InvalidParams, "kl_bound_ab needs 0 < a <= 1 <= b");
  if (delta == 0.0) return 0.0;
  return ExtendedReal(delta * (detail::log_ratio(a) - detail::log_ratio(b.value())));
}

/// Renyi divergence bound of order alpha over A(delta, m, M):
///   log(1 + delta ((M^alpha - 1)/(M - 1) - (1 - m^alpha)/(1 - m))) / (alpha - 1).
inline ExtendedReal renyi_bound(double alpha, const ClassParams& params) {
  detail::require_alpha(alpha);
  params.validate();
  detail::require_finite_M(params);
  detail::require_feasible(params);
  if (params.m == 1.0 || params.M == ExtendedReal(1.0) || params.delta == 0.0) return 0.0;
  const double upper = detail::power_slope(params.M.value(), alpha);
  const double lower = params.m == 0.0 ? 1.0 : detail::power_slope(params.m, alpha);
  const double x = params.delta * (upper - lower);
  if (!(1.0 + x > 0.0)) throw Error(Errc::LogDomain, "renyi bound argument <= 0");
  return ExtendedReal(std::log1p(x) / (alpha - 1.0));
}

/// Simic's relative-entropy bound over B(m, M) with a = 1/M, b = 1/m:
///   (a log b - b log a)/(b - a) + log((b - a)/(log b - log a)) - 1.
inline double simic_kl_bound(double a, double b) {
  if (!(a > 0.0 && a < 1.0 && b > 1.0 && std::isfinite(b)))
    throw Error(Errc::InvalidParams, "simic_kl_bound needs 0 < a < 1 < b < inf");
  const double la = std::log(a);
  const double lb = std::log(b);
  return (a * lb - b * la) / (b - a) + std::log((b - a) / (lb - la)) - 1.0;
}

/// Sason's chi-square bound 2 delta max{M - 1, 1 - m}.
inline double sason_chi2_bound(const ClassParams& params) {
  params.validate();
  detail::require_finite_M(params);
  detail::require_feasible(params);
  return 2.0 * params.delta * std::max(params.M.value() - 1.0, 1.0 - params.m);
}

/// Packages a bound with the inputs that produced it.
inline BoundReport make_report(ExtendedReal bound, const ClassParams& params, std::string generator_name,
                               Formula formula) {
  return BoundReport{bound, params, std::move(generator_name), formula};
}

}  // namespace fdivbound
