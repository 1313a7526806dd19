// Copyright 2026 The cvqt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace cvqt {

/// Malformed or out-of-range input (non-finite entries, bad parameter ranges).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on a state that does not satisfy its precondition,
/// typically an unphysical covariance matrix.
class PreconditionFailed : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quantity that should be positive for any physical input came out
/// non-positive. Indicates an internal inconsistency.
class NumericalDomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cvqt
