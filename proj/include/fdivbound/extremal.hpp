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
#include <optional>
#include <string>
#include <vector>

#include "fdivbound/bounds.hpp"
#include "fdivbound/distribution.hpp"
#include "fdivbound/divergence.hpp"
#include "fdivbound/error.hpp"
#include "fdivbound/generator.hpp"
#include "fdivbound/params.hpp"

namespace fdivbound {

/// Three-atom pair attaining theorem1_bound for every generator:
///   P = (t p, t (1 - p), 1 - t),  Q = (t q, t (1 - q), 1 - t)
/// with q = (M - 1)/(M - m), p = m q, t = delta (M - m)/((M - 1)(1 - m)).
/// The degenerate class (0, 1, 1) yields the one-atom pair P = Q = (1).
struct ExtremalPair {
  Distribution P;
  Distribution Q;
  ClassParams params;
  double q = 1.0;
  double p = 1.0;
  double t = 0.0;
};

inline ExtremalPair ternary_extremal(const ClassParams& params) {
  params.validate();
  detail::require_finite_M(params);
  detail::require_feasible(params);
  if (params.delta == 0.0) return {Distribution({1.0}), Distribution({1.0}), params, 1.0, 1.0, 0.0};

  const double m = params.m;
  const double big = params.M.value();
  const double span = big - m;
  // 1 - q and 1 - p in closed form; subtracting from 1 loses digits when M
  // is large or m is close to 1.
  const double q = (big - 1.0) / span;
  const double one_minus_q = (1.0 - m) / span;
  const double p = m * q;
  const double one_minus_p = big * (1.0 - m) / span;
  const double t = std::min(params.delta * span / ((big - 1.0) * (1.0 - m)), 1.0);

  Distribution P({t * p, t * one_minus_p, 1.0 - t});
  Distribution Q({t * q, t * one_minus_q, 1.0 - t});
  return {std::move(P), std::move(Q), params, q, p, t};
}

struct GeneratorCheck {
  std::string name;
  ExtendedReal divergence;
  std::optional<ExtendedReal> bound;  // empty when the target class admits no theorem-1 bound
  std::optional<ExtendedReal> gap;    // bound - divergence
};

/// Measured class parameters of a pair against a target class.
struct PairReport {
  ClassParams measured;
  ClassParams target;
  double delta_deviation = 0.0;
  double m_deviation = 0.0;
  ExtendedReal M_deviation = 0.0;
  bool delta_ok = false;
  bool m_ok = false;
  bool M_ok = false;
  std::vector<GeneratorCheck> checks;

  bool pass() const noexcept { return delta_ok && m_ok && M_ok; }
};

inline ClassParams measure_params(const Distribution& P, const Distribution& Q) {
  const RatioExtremes r = ratio_extremes(P, Q);
  return {total_variation(P, Q), r.m, r.M};
}

/// Checks (P, Q) against A(target). delta and m deviations are absolute;
/// the M deviation is compared against tol * max(1, M) because M is
/// unbounded above.
inline PairReport verify_membership(const Distribution& P, const Distribution& Q, const ClassParams& target,
                                    double tol, const std::vector<Generator>& generators = {}) {
  target.validate();
  PairReport report;
  report.measured = measure_params(P, Q);
  report.target = target;
  report.delta_deviation = std::abs(report.measured.delta - target.delta);
  report.m_deviation = std::abs(report.measured.m - target.m);
  if (target.M.is_pos_inf()) {
    report.M_deviation = ExtendedReal::inf();
    report.M_ok = false;
  } else {
    const double dev = std::abs(report.measured.M.value() - target.M.value());
    report.M_deviation = dev;
    report.M_ok = dev <= tol * std::max(1.0, target.M.value());
  }
  report.delta_ok = report.delta_deviation <= tol;
  report.m_ok = report.m_deviation <= tol;

  const bool boundable = !target.M.is_pos_inf() && detail::feasible_with_slack(target, kCapSlack);
  for (const Generator& gen : generators) {
    GeneratorCheck check{gen.name(), f_divergence(gen, P, Q), std::nullopt, std::nullopt};
    if (boundable) {
      check.bound = theorem1_bound(gen, target);
      if (check.bound->is_finite() || check.divergence.is_finite())
        check.gap = *check.bound - check.divergence;
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace fdivbound
