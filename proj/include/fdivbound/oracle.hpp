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
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "fdivbound/bounds.hpp"
#include "fdivbound/distribution.hpp"
#include "fdivbound/divergence.hpp"
#include "fdivbound/error.hpp"
#include "fdivbound/extremal.hpp"
#include "fdivbound/generator.hpp"
#include "fdivbound/params.hpp"

namespace fdivbound {

struct SearchConfig {
  int support_size = 3;        // atoms per sampled pair, in [2, 12]
  int trials = 1000;           // independent random starts
  std::uint64_t seed = 1;
  int perturbation_steps = 0;  // hill-climb steps per trial
  double step_scale = 0.25;    // initial perturbation scale
  double tolerance = 1e-10;    // violation threshold above the bound
  bool seed_extremal = true;   // evaluate the ternary extremal pair first
  int threads = 1;

  void validate() const {
    if (support_size < 2 || support_size > 12)
      throw Error(Errc::InvalidParams, "support_size must lie in [2, 12]");
    if (trials < 0 || perturbation_steps < 0 || threads < 1)
      throw Error(Errc::InvalidParams, "trials and steps must be >= 0, threads >= 1");
    if (!(step_scale > 0.0) || !(tolerance >= 0.0))
      throw Error(Errc::InvalidParams, "step_scale must be > 0 and tolerance >= 0");
  }
};

struct DistributionPair {
  Distribution P;
  Distribution Q;
};

struct SearchOutcome {
  ExtendedReal best_value = ExtendedReal::neg_inf();
  DistributionPair best_pair{Distribution({1.0}), Distribution({1.0})};
  ExtendedReal bound = 0.0;
  ExtendedReal gap = 0.0;  // bound - best_value
  std::int64_t violations = 0;
  std::int64_t evaluations = 0;
};

namespace detail {

/// Independent stream seed for trial `index` of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t state = seed ^ (0xD1B54A32D192ED03ULL * (index + 1));
  splitmix64(state);
  return splitmix64(state);
}

/// Distribution-agnostic transforms over mt19937_64 so results do not depend
/// on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return unit_from_bits(engine_()); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double exponential() { return -std::log1p(-uniform()); }
  double normal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

enum class Side { Lower, Upper, Unit };

/// A pair in A(delta, m, M) described by per-atom density ratios and shape
/// weights. Atom 0 sits at ratio m, atom 1 at ratio M, atom 2 at ratio 1; the
/// rest are free. Q-masses on each side are scaled so that
///   sum_lower q (1 - r) = sum_upper q (r - 1) = delta,
/// which fixes the total variation; leftover mass goes to ratio-1 atoms.
struct PairSketch {
  std::vector<Side> side;
  std::vector<double> ratio;
  std::vector<double> weight;
  double mix = 0.0;  // in [0, 1]: how far shape weights lean toward the extreme atoms
  std::vector<std::size_t> order;
  bool pinned = false;  // at the cap: every lower atom at m, every upper atom at M
};

inline double side_scale(const PairSketch& s, Side side, double lambda, double extreme_gap) {
  // Weighted mean of |r - 1| under normalized shape weights mixed toward the extreme.
  double wsum = 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < s.side.size(); ++i) {
    if (s.side[i] != side) continue;
    wsum += s.weight[i];
    acc += s.weight[i] * std::abs(s.ratio[i] - 1.0);
  }
  return (1.0 - lambda) * (acc / wsum) + lambda * extreme_gap;
}

inline DistributionPair build_pair(const PairSketch& s, const ClassParams& params) {
  const double delta = params.delta;
  const double m = params.m;
  const double big = params.M.value();
  const std::size_t n = s.side.size();

  auto total_q = [&](double lambda) {
    return delta / side_scale(s, Side::Lower, lambda, 1.0 - m) +
           delta / side_scale(s, Side::Upper, lambda, big - 1.0);
  };
  double lambda_min = 0.0;
  if (total_q(0.0) > 1.0) {
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (total_q(mid) > 1.0 ? lo : hi) = mid;
    }
    lambda_min = hi;
  }
  const double lambda = lambda_min + s.mix * (1.0 - lambda_min);

  auto side_weight_sum = [&](Side side) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (s.side[i] == side) acc += s.weight[i];
    return acc;
  };
  const double w_lower = side_weight_sum(Side::Lower);
  const double w_upper = side_weight_sum(Side::Upper);
  const double w_unit = side_weight_sum(Side::Unit);
  const double lower_scale = side_scale(s, Side::Lower, lambda, 1.0 - m);
  const double upper_scale = side_scale(s, Side::Upper, lambda, big - 1.0);

  std::vector<double> q(n, 0.0);
  double used = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.side[i] == Side::Unit) continue;
    const bool lower = s.side[i] == Side::Lower;
    double share = (1.0 - lambda) * s.weight[i] / (lower ? w_lower : w_upper);
    if (i == 0 || i == 1) share += lambda;  // the extreme atoms
    q[i] = delta * share / (lower ? lower_scale : upper_scale);
    used += q[i];
  }
  const double rest = std::max(0.0, 1.0 - used);
  for (std::size_t i = 0; i < n; ++i)
    if (s.side[i] == Side::Unit) q[i] = rest * s.weight[i] / w_unit;

  std::vector<double> pw(n);
  std::vector<double> qw(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = s.order[k];
    qw[k] = q[i];
    pw[k] = s.ratio[i] * q[i];
  }
  return {Distribution(std::move(pw)), Distribution(std::move(qw))};
}

inline PairSketch random_sketch(const ClassParams& params, int n, Rng& rng) {
  const double m = params.m;
  const double big = params.M.value();
  PairSketch s;
  s.pinned = params.delta >= tv_cap(m, params.M) * (1.0 - 1e-12);
  s.side = {Side::Lower, Side::Upper, Side::Unit};
  s.ratio = {m, big, 1.0};
  for (int i = 3; i < n; ++i) {
    const auto side = static_cast<Side>(rng.index(3));
    double r = 1.0;
    if (side == Side::Lower) {
      r = (s.pinned || rng.uniform() < 1.0 / 3.0) ? m : rng.uniform(m, 1.0);
    } else if (side == Side::Upper) {
      r = (s.pinned || rng.uniform() < 1.0 / 3.0) ? big : big - rng.uniform() * (big - 1.0);
    }
    // Interior draws can round onto 1; keep sides strict.
    if (side == Side::Lower && r >= 1.0) r = m;
    if (side == Side::Upper && r <= 1.0) r = big;
    s.side.push_back(side);
    s.ratio.push_back(r);
  }
  for (int i = 0; i < n; ++i) s.weight.push_back(rng.exponential() + 1e-3);
  s.mix = s.pinned ? 1.0 : rng.uniform();
  s.order.resize(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < s.order.size(); ++i) s.order[i] = i;
  rng.shuffle(s.order);
  return s;
}

inline PairSketch perturb_sketch(const PairSketch& base, const ClassParams& params, double scale, Rng& rng) {
  PairSketch s = base;
  const double m = params.m;
  const double big = params.M.value();
  const std::size_t n = s.side.size();
  for (std::size_t i = 0; i < n; ++i) {
    s.weight[i] = std::clamp(s.weight[i] * std::exp(scale * rng.normal()), 1e-12, 1e12);
    if (i < 3 || s.pinned) continue;
    if (s.side[i] == Side::Lower) {
      const double r = s.ratio[i] + scale * (1.0 - m) * rng.normal();
      s.ratio[i] = (r >= m && r < 1.0) ? r : s.ratio[i];
    } else if (s.side[i] == Side::Upper) {
      const double r = s.ratio[i] + scale * (big - 1.0) * rng.normal();
      s.ratio[i] = (r > 1.0 && r <= big) ? r : s.ratio[i];
    }
  }
  if (!s.pinned) s.mix = std::clamp(s.mix + scale * rng.normal(), 0.0, 1.0);
  return s;
}

inline void require_sampleable(const ClassParams& params, int n) {
  params.validate();
  require_finite_M(params);
  require_feasible(params);
  if (n < 3) throw Error(Errc::InvalidParams, "in-class sampling needs at least 3 atoms");
}

inline DistributionPair uniform_identical_pair(int n) {
  std::vector<double> w(static_cast<std::size_t>(n), 1.0 / n);
  return {Distribution(w), Distribution(w)};
}

}  // namespace detail

/// Random pair in A(delta, m, M) with n atoms. Every draw contains an atom at
/// ratio m, an atom at ratio M and a ratio-1 atom (possibly of zero mass);
/// the rest are split copies of the extremes or interior ratios.
inline DistributionPair sample_pair_in_class(const ClassParams& params, int n, std::uint64_t seed) {
  detail::require_sampleable(params, n);
  if (params.delta == 0.0) return detail::uniform_identical_pair(n);
  detail::Rng rng(seed);
  return detail::build_pair(detail::random_sketch(params, n, rng), params);
}

namespace detail {

struct TrialResult {
  ExtendedReal best = ExtendedReal::neg_inf();
  std::optional<DistributionPair> pair;
  std::int64_t violations = 0;
  std::int64_t evaluations = 0;
};

inline bool exceeds(ExtendedReal value, ExtendedReal bound, double tol) {
  if (bound.is_pos_inf()) return false;
  if (value.is_pos_inf()) return true;
  return value.value() > bound.value() + tol;
}

inline TrialResult run_constrained_trial(const Generator& gen, const ClassParams& params,
                                         const SearchConfig& config, ExtendedReal bound,
                                         std::uint64_t trial_seed) {
  TrialResult out;
  auto consider = [&](DistributionPair pair) {
    const ExtendedReal value = f_divergence(gen, pair.P, pair.Q);
    ++out.evaluations;
    if (exceeds(value, bound, config.tolerance)) ++out.violations;
    const bool better = value > out.best;
    if (better) {
      out.best = value;
      out.pair = std::move(pair);
    }
    return better;
  };

  if (params.delta == 0.0) {
    consider(uniform_identical_pair(config.support_size));
    return out;
  }
  Rng rng(trial_seed);
  PairSketch current = random_sketch(params, config.support_size, rng);
  consider(build_pair(current, params));

  constexpr int kBatch = 8;
  double scale = config.step_scale;
  int rejected_in_batch = 0;
  for (int step = 0; step < config.perturbation_steps; ++step) {
    PairSketch candidate = perturb_sketch(current, params, scale, rng);
    if (consider(build_pair(candidate, params))) {
      current = std::move(candidate);
      rejected_in_batch = 0;
    } else if (++rejected_in_batch == kBatch) {
      scale = std::max(scale * 0.5, 1e-12);
      rejected_in_batch = 0;
    }
  }
  return out;
}

/// Runs body(i) for i in [0, count) over `threads` workers with contiguous
/// chunks; results land at their own index so the merge order is fixed.
template <typename Result, typename Body>
std::vector<Result> run_indexed(int count, int threads, Body body) {
  std::vector<Result> results(static_cast<std::size_t>(count));
  const int workers = std::max(1, std::min(threads, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = body(i);
    return results;
  }
  std::vector<std::jthread> pool;
  const int chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int begin = w * chunk;
    const int end = std::min(count, begin + chunk);
    pool.emplace_back([&results, &body, begin, end] {
      for (int i = begin; i < end; ++i) results[static_cast<std::size_t>(i)] = body(i);
    });
  }
  return results;
}

inline ExtendedReal gap_of(ExtendedReal bound, ExtendedReal best) {
  if (bound.is_pos_inf()) return best.is_pos_inf() ? ExtendedReal(0.0) : ExtendedReal::inf();
  return bound - best;
}

}  // namespace detail

/// Random search for sup D_f over A(delta, m, M). Counts every evaluated pair
/// that exceeds theorem1_bound + tolerance as a violation.
inline SearchOutcome search_sup(const Generator& gen, const ClassParams& params, const SearchConfig& config) {
  config.validate();
  detail::require_sampleable(params, config.support_size);
  SearchOutcome outcome;
  outcome.bound = theorem1_bound(gen, params);

  auto merge = [&](detail::TrialResult r) {
    outcome.violations += r.violations;
    outcome.evaluations += r.evaluations;
    if (r.pair && r.best > outcome.best_value) {
      outcome.best_value = r.best;
      outcome.best_pair = std::move(*r.pair);
    }
  };

  if (config.seed_extremal) {
    ExtremalPair ext = ternary_extremal(params);
    detail::TrialResult r;
    r.best = f_divergence(gen, ext.P, ext.Q);
    r.evaluations = 1;
    r.violations = detail::exceeds(r.best, outcome.bound, config.tolerance) ? 1 : 0;
    r.pair = DistributionPair{std::move(ext.P), std::move(ext.Q)};
    merge(std::move(r));
  }

  auto results = detail::run_indexed<detail::TrialResult>(config.trials, config.threads, [&](int i) {
    return detail::run_constrained_trial(gen, params, config, outcome.bound,
                                         detail::derive_seed(config.seed, static_cast<std::uint64_t>(i)));
  });
  for (auto& r : results) merge(std::move(r));

  outcome.gap = outcome.best_value.is_neg_inf() ? ExtendedReal::inf()
                                                : detail::gap_of(outcome.bound, outcome.best_value);
  return outcome;
}

struct SweepPoint {
  double M = 1.0;
  ExtendedReal bound;     // theorem1_bound(gen, delta, 0, M)
  ExtendedReal attained;  // D_f of the ternary extremal pair
};

/// Divergence proxy for Vajda-limit checks: exceeding this many nats counts
/// as reaching +inf.
inline constexpr double kDivergenceThreshold = 1e6;
/// Largest M swept by search_unconstrained_sup.
inline constexpr double kSweepMaxM = 1e12;

struct UnconstrainedOutcome {
  SearchOutcome outcome;  // bound is vajda_bound(gen, delta)
  std::vector<SweepPoint> sweep;
  bool monotone = true;
  bool exceeds_threshold = false;
};

/// Sweeps M over 10^(k/4) up to 1e12 with m = 0, evaluating theorem1_bound
/// and the extremal pair at each M. The attained values approach
/// vajda_bound(gen, delta) from below.
inline UnconstrainedOutcome search_unconstrained_sup(const Generator& gen, double delta,
                                                     const SearchConfig& config) {
  config.validate();
  UnconstrainedOutcome result;
  result.outcome.bound = vajda_bound(gen, delta);
  if (delta == 0.0) {
    result.outcome.best_value = 0.0;
    result.outcome.best_pair = {Distribution({1.0}), Distribution({1.0})};
    result.outcome.gap = detail::gap_of(result.outcome.bound, 0.0);
    return result;
  }

  ExtendedReal previous = ExtendedReal::neg_inf();
  for (int k = 1; k <= 48; ++k) {
    const double big = std::pow(10.0, k / 4.0);
    const ClassParams params{delta, 0.0, big};
    if (!feasible(params)) continue;
    SweepPoint point{big, theorem1_bound(gen, params), 0.0};
    ExtremalPair ext = ternary_extremal(params);
    point.attained = f_divergence(gen, ext.P, ext.Q);
    ++result.outcome.evaluations;
    if (detail::exceeds(point.attained, result.outcome.bound, config.tolerance)) ++result.outcome.violations;
    if (!previous.is_neg_inf() && previous.is_finite() && point.attained.is_finite() &&
        point.attained.value() < previous.value() - config.tolerance * std::max(1.0, std::abs(previous.value())))
      result.monotone = false;
    previous = point.attained;
    if (point.attained > result.outcome.best_value) {
      result.outcome.best_value = point.attained;
      result.outcome.best_pair = {ext.P, ext.Q};
    }
    result.sweep.push_back(std::move(point));
  }
  result.exceeds_threshold =
      result.outcome.best_value.is_pos_inf() ||
      (result.outcome.best_value.is_finite() && result.outcome.best_value.value() > kDivergenceThreshold);
  result.outcome.gap = result.outcome.best_value.is_neg_inf()
                           ? ExtendedReal::inf()
                           : detail::gap_of(result.outcome.bound, result.outcome.best_value);
  return result;
}

namespace detail {

/// Sum of deviations of (P, Q) from the target class; M is measured relative
/// to max(1, M).
struct Mismatch {
  double delta = 0.0;
  double m = 0.0;
  double M = 0.0;
  double total() const noexcept { return delta + m + M; }
  bool within(double tol) const noexcept { return delta <= tol && m <= tol && M <= tol; }
};

inline Mismatch mismatch_of(std::span<const double> p, std::span<const double> q, const ClassParams& target) {
  double tv = 0.0;
  double lo = 1.0;
  double hi = 1.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    tv += std::abs(p[i] - q[i]);
    const double r = p[i] / q[i];
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  const double big = target.M.value();
  return {std::abs(0.5 * tv - target.delta), std::abs(lo - target.m), std::abs(hi - big) / std::max(1.0, big)};
}

inline void softmax(std::span<const double> logits, std::vector<double>& out) {
  const double top = *std::max_element(logits.begin(), logits.end());
  out.resize(logits.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) sum += out[i] = std::exp(logits[i] - top);
  for (double& v : out) v /= sum;
}

}  // namespace detail

/// Penalized hill-climb for any n-atom pair whose (delta, m, M) all lie
/// within `match_tol` of the target. Q is a softmax over n logits and each
/// atom carries a ratio in [m, M]; atoms 0 and 1 sit on the endpoints. The
/// penalty is |sum q r - 1| + |TV - delta|, and every candidate that gets
/// near zero is re-measured on the normalized pair before it is returned.
inline std::optional<DistributionPair> search_witness(const ClassParams& target, const SearchConfig& config,
                                                      double match_tol = 1e-6) {
  config.validate();
  target.validate();
  if (target.M.is_pos_inf()) return std::nullopt;
  const auto n = static_cast<std::size_t>(config.support_size);
  const std::size_t dims = 2 * n - 2;
  const int steps = std::max(config.perturbation_steps, 1);
  const double lo = target.m;
  const double hi = target.M.value();

  std::vector<double> q;
  std::vector<double> r(n);
  auto unpack = [&](const std::vector<double>& z) {
    detail::softmax(std::span(z).first(n), q);
    r[0] = lo;
    r[1] = hi;
    for (std::size_t i = 2; i < n; ++i) r[i] = lo + (hi - lo) / (1.0 + std::exp(-z[n + i - 2]));
  };
  auto penalty = [&](const std::vector<double>& z) {
    unpack(z);
    double mass = 0.0;
    double tv = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      mass += q[i] * r[i];
      tv += q[i] * std::abs(r[i] - 1.0);
    }
    return std::abs(mass - 1.0) + std::abs(0.5 * tv - target.delta);
  };
  auto realize = [&](const std::vector<double>& z) -> std::optional<DistributionPair> {
    unpack(z);
    std::vector<double> p(n);
    double mass = 0.0;
    for (std::size_t i = 0; i < n; ++i) mass += p[i] = q[i] * r[i];
    if (!(mass > 0.0)) return std::nullopt;
    for (double& v : p) v /= mass;
    if (!detail::mismatch_of(p, q, target).within(match_tol)) return std::nullopt;
    return DistributionPair{Distribution(p), Distribution(q)};
  };

  for (int trial = 0; trial < config.trials; ++trial) {
    detail::Rng rng(detail::derive_seed(config.seed, static_cast<std::uint64_t>(trial)));
    std::vector<double> x(dims);
    for (double& v : x) v = 2.0 * rng.normal();
    double best = penalty(x);
    double scale = config.step_scale * 4.0;
    int rejected = 0;
    for (int step = 0; step < steps && best > 0.1 * match_tol; ++step) {
      std::vector<double> y = x;
      y[rng.index(dims)] += scale * rng.normal();
      if (rng.uniform() < 0.5) y[rng.index(dims)] += scale * rng.normal();
      const double cand = penalty(y);
      if (cand < best) {
        x = std::move(y);
        best = cand;
        rejected = 0;
      } else if (++rejected == 4 * static_cast<int>(dims)) {
        scale = std::max(scale * 0.5, 1e-12);
        rejected = 0;
      }
    }
    if (auto pair = realize(x)) return pair;
  }
  return std::nullopt;
}

/// Corroborates feasible(params). Feasible classes must yield an in-class
/// sample that passes verify_membership at 1e-9; infeasible ones must resist
/// a penalized witness search at 1e-6. Returns true when reality agrees with
/// the predicate.
inline bool falsify_feasibility(const ClassParams& params, const SearchConfig& config) {
  params.validate();
  if (feasible(params)) {
    if (params.M.is_pos_inf()) return false;
    const int n = std::max(3, config.support_size);
    const DistributionPair pair = sample_pair_in_class(params, n, config.seed);
    return verify_membership(pair.P, pair.Q, params, 1e-9).pass();
  }
  return !search_witness(params, config).has_value();
}

}  // namespace fdivbound
