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
#include <string_view>

#include "fdivbound/record.hpp"
#include "json.hpp"

namespace fdivbound {

namespace detail {

inline Value value_from_json(const nlohmann::ordered_json& j) {
  auto scalar = [](const nlohmann::ordered_json& x) -> ExtendedReal {
    if (x.is_number()) return ExtendedReal(x.get<double>());
    if (x.is_string()) {
      if (auto v = parse_extended(x.get<std::string>())) return *v;
    }
    throw Error(Errc::InvalidParams, "record value is not an extended real: " + x.dump());
  };
  if (j.is_array()) {
    std::vector<ExtendedReal> xs;
    for (const auto& x : j) xs.push_back(scalar(x));
    return xs;
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "-inf") return scalar(j);
    return s;
  }
  return scalar(j);
}

inline std::vector<Field> fields_from_json(const nlohmann::ordered_json& obj) {
  std::vector<Field> out;
  for (const auto& [k, v] : obj.items()) out.emplace_back(k, value_from_json(v));
  return out;
}

}  // namespace detail

/// Inverse of to_json(OutputRecord). "inf" and "-inf" strings read back as
/// infinities.
inline OutputRecord parse_record_json(std::string_view text) {
  const auto j = nlohmann::ordered_json::parse(text);
  OutputRecord r;
  r.command = j.at("command").get<std::string>();
  r.inputs = detail::fields_from_json(j.at("inputs"));
  r.results = detail::fields_from_json(j.at("results"));
  const auto status = j.at("status").get<std::string>();
  r.status = status == "pass" ? Status::Pass : status == "fail" ? Status::Fail : Status::NotApplicable;
  return r;
}

}  // namespace fdivbound
