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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qyao/boolean_function.hpp"
#include "qyao/distribution.hpp"

namespace qyao {

/// A parsed function spec. `symmetric` is set for the symmetric and threshold forms.
struct FunctionSpec {
  BooleanFunction function;
  std::optional<SymmetricFunction> symmetric;
  std::string text;
};

// One of
//   symmetric N profile=<N+1 bits>
//   threshold N t=<int>
//   table N hex=<2^N-bit truth table in hex>
// Bit j of the hex number (big-endian digits) is f at the input with word j.
FunctionSpec parse_function_spec(std::string_view text);

// Named functions accepted on the command line: or, and, majority, parity,
// andor, or a full function spec.
FunctionSpec named_function(std::string_view name, int arity);

// One of `uniform`, `simon n=<int>`, `skew seed=<int>`, or CSV lines
// `<input bits>,<weight>` with rational weights (normalized exactly).
InputDistribution parse_distribution_spec(std::string_view text, int length);

std::string read_text_file(const std::string& path);

}  // namespace qyao
