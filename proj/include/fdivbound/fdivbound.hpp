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

#include "fdivbound/bounds.hpp"
#include "fdivbound/distribution.hpp"
#include "fdivbound/divergence.hpp"
#include "fdivbound/error.hpp"
#include "fdivbound/extended_real.hpp"
#include "fdivbound/extremal.hpp"
#include "fdivbound/generator.hpp"
#include "fdivbound/oracle.hpp"
#include "fdivbound/params.hpp"
#include "fdivbound/record.hpp"
