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

#include <stdexcept>
#include <string>
#include <string_view>

namespace fdivbound {

enum class Errc {
  EmptyVector,
  NegativeWeight,
  SumOutOfTolerance,
  LengthMismatch,
  NotAbsolutelyContinuous,
  MeanOutOfRange,
  DegenerateInterval,
  InvalidAlpha,
  FailsAnchorCheck,
  FailsConvexitySample,
  LogDomain,
  InvalidParams,
  Infeasible,
  UnboundedM,
  UndefinedArithmetic,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyVector: return "EmptyVector";
    case Errc::NegativeWeight: return "NegativeWeight";
    case Errc::SumOutOfTolerance: return "SumOutOfTolerance";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotAbsolutelyContinuous: return "NotAbsolutelyContinuous";
    case Errc::MeanOutOfRange: return "MeanOutOfRange";
    case Errc::DegenerateInterval: return "DegenerateInterval";
    case Errc::InvalidAlpha: return "InvalidAlpha";
    case Errc::FailsAnchorCheck: return "FailsAnchorCheck";
    case Errc::FailsConvexitySample: return "FailsConvexitySample";
    case Errc::LogDomain: return "LogDomain";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::Infeasible: return "Infeasible";
    case Errc::UnboundedM: return "UnboundedM";
    case Errc::UndefinedArithmetic: return "UndefinedArithmetic";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an Error carrying a code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fdivbound
