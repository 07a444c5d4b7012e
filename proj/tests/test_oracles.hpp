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

// Independent reference computations for tests. Everything here works in
// long double straight from the defining sums and formulas, without calling
// into the library's evaluation paths.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Real = long double;
using Vec = std::vector<Real>;

inline Real tv(const Vec& p, const Vec& q) {
  Real s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::fabs(p[i] - q[i]);
  return s / 2;
}

/// sum_{q_i > 0} q_i f(p_i / q_i), with f(0) supplied separately.
inline Real f_div(const std::function<Real(Real)>& f, Real f0, const Vec& p, const Vec& q) {
  Real s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (q[i] == 0) continue;
    s += p[i] == 0 ? q[i] * f0 : q[i] * f(p[i] / q[i]);
  }
  return s;
}

inline Real kl(const Vec& p, const Vec& q) {
  Real s = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0) s += p[i] * std::log(p[i] / q[i]);
  return s;
}

inline Real chi2_pearson(const Vec& p, const Vec& q) {
  Real s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += (p[i] - q[i]) * (p[i] - q[i]) / q[i];
  return s;
}

/// The three-atom pair written out atom by atom.
struct Ternary {
  Vec p, q;
};

inline Ternary ternary(Real delta, Real m, Real M) {
  const Real qq = (M - 1) / (M - m);
  const Real pp = m * qq;
  const Real t = delta * (M - m) / ((M - 1) * (1 - m));
  return {{t * pp, t * (1 - pp), 1 - t}, {t * qq, t * (1 - qq), 1 - t}};
}

inline Real simic(Real a, Real b) {
  return (a * std::log(b) - b * std::log(a)) / (b - a) + std::log((b - a) / (std::log(b) - std::log(a))) - 1;
}

/// Random pair on n atoms with Q > 0 everywhere and P zero on a few atoms.
inline std::pair<std::vector<double>, std::vector<double>> random_pair(std::mt19937_64& rng, int n,
                                                                       double zero_prob = 0.15) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> p(static_cast<std::size_t>(n)), q(static_cast<std::size_t>(n));
  double sp = 0, sq = 0;
  for (int i = 0; i < n; ++i) {
    p[i] = u(rng) < zero_prob ? 0.0 : -std::log(1.0 - u(rng));
    q[i] = -std::log(1.0 - u(rng)) + 1e-6;
    sp += p[i];
    sq += q[i];
  }
  if (sp == 0) {
    p[0] = 1.0;
    sp = 1.0;
  }
  for (auto& v : p) v /= sp;
  for (auto& v : q) v /= sq;
  return {p, q};
}

inline Vec widen(const std::vector<double>& v) { return Vec(v.begin(), v.end()); }

}  // namespace oracle
