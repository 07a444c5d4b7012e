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

#include <string>

#include "fdivbound/error.hpp"
#include "fdivbound/extended_real.hpp"

namespace fdivbound {

/// Identifies the constraint class A(delta, m, M): pairs (P, Q) with total
/// variation delta and density ratio dP/dQ ranging exactly over [m, M].
struct ClassParams {
  double delta = 0.0;
  double m = 1.0;
  ExtendedReal M = 1.0;

  /// Throws InvalidParams unless 0 <= delta <= 1 and 0 <= m <= 1 <= M.
  void validate() const {
    if (!(delta >= 0.0 && delta <= 1.0))
      throw Error(Errc::InvalidParams, "delta must lie in [0, 1], got " + std::to_string(delta));
    if (!(m >= 0.0 && m <= 1.0))
      throw Error(Errc::InvalidParams, "m must lie in [0, 1], got " + std::to_string(m));
    if (!(M >= ExtendedReal(1.0)))
      throw Error(Errc::InvalidParams, "M must be >= 1, got " + format_extended(M));
  }

  friend bool operator==(const ClassParams&, const ClassParams&) = default;
};

}  // namespace fdivbound
