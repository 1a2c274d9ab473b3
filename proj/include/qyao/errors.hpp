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

#include <stdexcept>
#include <string>

namespace qyao {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input lies outside the domain of a promise function.
class DomainViolation : public Error {
 public:
  using Error::Error;
};

// Conditioning on an event of zero probability mass.
class EmptyConditioning : public Error {
 public:
  using Error::Error;
};

// A combinatorial or memory guard was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// Malformed parameters, specs or program shapes.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace qyao
