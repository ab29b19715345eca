// Copyright 2026 The robust_sched Authors
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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace robust_sched {

/// Integer time units. All instance data (processing times, release dates)
/// is integral, so completion times and makespans are exact.
using Time = std::int64_t;

/// 0-based job index into an Instance.
using JobIndex = std::size_t;

/// 0-based machine index into an Instance.
using MachineIndex = std::size_t;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance, scenario, schedule or generator parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input text that cannot be parsed into a domain object.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Problem size above the configured oracle limits.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace robust_sched
