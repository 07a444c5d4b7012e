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
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "fdivbound/error.hpp"

namespace fdivbound {

/// Inputs whose weights sum to within this of 1 are accepted and renormalized.
inline constexpr double kDistributionSumTolerance = 1e-9;

/// A probability mass function on {0, ..., n-1}. Immutable once built.
class Distribution {
 public:
  /// Validates and renormalizes. Throws EmptyVector, NegativeWeight or
  /// SumOutOfTolerance.
  explicit Distribution(std::vector<double> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw Error(Errc::EmptyVector, "distribution needs at least one atom");
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (!(w_[i] >= 0.0) || !std::isfinite(w_[i]))
        throw Error(Errc::NegativeWeight, "weight " + std::to_string(i) + " is negative or not finite");
    }
    const double sum = std::accumulate(w_.begin(), w_.end(), 0.0);
    if (std::abs(sum - 1.0) > kDistributionSumTolerance)
      throw Error(Errc::SumOutOfTolerance, "weights sum to " + std::to_string(sum));
    if (sum != 1.0) {
      for (double& w : w_) w /= sum;
    }
  }

  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }
  std::span<const double> weights() const noexcept { return w_; }
  auto begin() const noexcept { return w_.begin(); }
  auto end() const noexcept { return w_.end(); }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<double> w_;
};

inline Distribution validate_distribution(std::vector<double> weights) {
  return Distribution(std::move(weights));
}

}  // namespace fdivbound
