// Copyright 2026 The qyao Authors.
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

#include "json.hpp"
#include "qyao/certificates.hpp"
#include "qyao/query_sim.hpp"
#include "qyao/weak_exact.hpp"
#include "qyao/yao.hpp"
#include "qyao/zero_sum.hpp"

namespace qyao {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// {"exact": "p/q", "float": p/q}
Json rational_json(const Rational& r);

Json to_json(const SubsetCertificate& c);
Json to_json(const InputRecord& r);
// Records are included when `per_input` is set.
Json to_json(const AlgorithmReport& r, bool per_input = true);
Json to_json(const FindAllReport& r);
Json to_json(const sim::BranchTree& tree);
Json to_json(const GameSolution& s);
Json to_json(const YaoReport& r);
Json to_json(const FloorPayoff& p);

// Adds schema_version, command and (unless disabled) a UTC timestamp.
Json envelope(Json body, const std::string& command, bool timestamp);

// Two-space indented, keys sorted, trailing newline.
std::string dump(const Json& j);

}  // namespace qyao
