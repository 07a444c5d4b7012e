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
#include <concepts>
#include <cstddef>
#include <string>

#include "fdivbound/distribution.hpp"
#include "fdivbound/error.hpp"
#include "fdivbound/extended_real.hpp"
#include "fdivbound/generator.hpp"

namespace fdivbound {

namespace detail {

inline void require_same_length(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size())
    throw Error(Errc::LengthMismatch, "support sizes differ: " + std::to_string(p.size()) + " vs " +
                                          std::to_string(q.size()));
}

inline void require_absolutely_continuous(const Distribution& p, const Distribution& q) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (q[i] == 0.0 && p[i] > 0.0)
      throw Error(Errc::NotAbsolutelyContinuous,
                  "P puts mass on atom " + std::to_string(i) + " where Q has none");
  }
}

}  // namespace detail

/// (1/2) sum |p_i - q_i|.
inline double total_variation(const Distribution& p, const Distribution& q) {
  detail::require_same_length(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return std::min(0.5 * sum, 1.0);
}

struct RatioExtremes {
  double m = 1.0;
  ExtendedReal M = 1.0;
};

/// Min and max of p_i / q_i over the support of Q. The mean of the ratio
/// under Q is 1, so m <= 1 <= M; results are clamped to keep that true
/// under rounding.
inline RatioExtremes ratio_extremes(const Distribution& p, const Distribution& q) {
  detail::require_same_length(p, q);
  detail::require_absolutely_continuous(p, q);
  double lo = 1.0;
  double hi = 1.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (q[i] == 0.0) continue;
    const double r = p[i] / q[i];
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return {lo, ExtendedReal(hi)};
}

/// D_f(P || Q) = sum over q_i > 0 of q_i f(p_i / q_i). Atoms with p_i = 0
/// use f(0+); atoms with q_i = 0 contribute nothing.
inline ExtendedReal f_divergence(const Generator& gen, const Distribution& p, const Distribution& q) {
  detail::require_same_length(p, q);
  detail::require_absolutely_continuous(p, q);
  ExtendedReal total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (q[i] == 0.0) continue;
    if (p[i] == 0.0) {
      total += ExtendedReal::mul_absorbing(q[i], gen.f_at_zero());
    } else {
      total += ExtendedReal(q[i] * gen.eval(p[i] / q[i]));
    }
  }
  return total;
}

namespace detail {

inline double chord_weight(double a, double b, double mean) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(mean))
    throw Error(Errc::MeanOutOfRange, "chord endpoints and mean must be finite");
  if (a == b) throw Error(Errc::DegenerateInterval, "chord needs a < b");
  if (a > b) throw Error(Errc::MeanOutOfRange, "chord needs a < b");
  if (mean < a || mean > b) throw Error(Errc::MeanOutOfRange, "mean lies outside [a, b]");
  return (b - mean) / (b - a);
}

}  // namespace detail

/// Chord upper bound for a convex phi: any random variable on [a, b] with the
/// given mean satisfies E[phi] <= w phi(a) + (1 - w) phi(b), w = (b - mean)/(b - a).
template <typename Phi>
  requires std::invocable<const Phi&, double> && (!std::same_as<std::remove_cvref_t<Phi>, Generator>)
double chord_bound(const Phi& phi, double a, double b, double mean) {
  const double w = detail::chord_weight(a, b, mean);
  const double left = w == 0.0 ? 0.0 : w * phi(a);
  const double right = w == 1.0 ? 0.0 : (1.0 - w) * phi(b);
  return left + right;
}

/// Generator form; a = 0 resolves to f(0+), so the result may be +inf.
inline ExtendedReal chord_bound(const Generator& gen, double a, double b, double mean) {
  if (a < 0.0) throw Error(Errc::MeanOutOfRange, "generator domain is [0, inf)");
  const double w = detail::chord_weight(a, b, mean);
  return ExtendedReal::mul_absorbing(w, gen.value_at(a)) +
         ExtendedReal::mul_absorbing(1.0 - w, gen.value_at(b));
}

/// Renyi divergence of order alpha from the Hellinger divergence of the same
/// order: log(1 + (alpha - 1) h) / (alpha - 1).
inline ExtendedReal renyi_from_hellinger(double alpha, ExtendedReal h) {
  if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha))
    throw Error(Errc::InvalidAlpha, "alpha must lie in (0,1) or (1,inf)");
  if (h < ExtendedReal(0.0)) throw Error(Errc::InvalidParams, "Hellinger divergence is nonnegative");
  if (h.is_pos_inf()) {
    if (alpha > 1.0) return ExtendedReal::inf();
    throw Error(Errc::LogDomain, "1 + (alpha - 1) h is -inf");
  }
  const double x = (alpha - 1.0) * h.value();
  if (!(1.0 + x > 0.0)) throw Error(Errc::LogDomain, "1 + (alpha - 1) h <= 0");
  return ExtendedReal(std::log1p(x) / (alpha - 1.0));
}

}  // namespace fdivbound
