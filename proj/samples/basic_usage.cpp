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

// Bounds the relative entropy of a pair from its total variation and
// density-ratio extremes, then builds the pair that attains the bound.

#include <cstdio>

#include "fdivbound/fdivbound.hpp"

int main() {
  using namespace fdivbound;

  const Distribution P({0.1, 0.35, 0.35, 0.2});
  const Distribution Q({0.25, 0.25, 0.3, 0.2});
  const ClassParams measured = measure_params(P, Q);
  const Generator kl = kl_generator();

  std::printf("delta = %.6f  m = %.6f  M = %.6f\n", measured.delta, measured.m, measured.M.value());
  std::printf("D_KL(P||Q)          = %.9f\n", f_divergence(kl, P, Q).value());
  std::printf("optimal upper bound = %.9f\n", theorem1_bound(kl, measured).value());

  const ExtremalPair extremal = ternary_extremal(measured);
  std::printf("attained by P = (%.6f, %.6f, %.6f), Q = (%.6f, %.6f, %.6f): %.9f\n", extremal.P[0],
              extremal.P[1], extremal.P[2], extremal.Q[0], extremal.Q[1], extremal.Q[2],
              f_divergence(kl, extremal.P, extremal.Q).value());
  return 0;
}
