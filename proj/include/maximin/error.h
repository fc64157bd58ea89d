// Copyright 2026 The Maximin Authors
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

#ifndef MAXIMIN_ERROR_H_
#define MAXIMIN_ERROR_H_

#include <stdexcept>
#include <string>

namespace maximin {

// Base class of every error thrown by the library. Precondition violations on
// plain arguments (negative tolerances, mismatched lengths) are reported with
// std::invalid_argument instead.
class MaximinError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invariant-violating instance file.
class InstanceFormatError : public MaximinError {
 public:
  using MaximinError::MaximinError;
};

// The relaxation value is not positive, so no lifted matrix exists. Happens
// only when every feasible point coincides with an input point.
class NonPositiveRelaxationError : public MaximinError {
 public:
  using MaximinError::MaximinError;
};

// A rejection sampler ran out of draws.
class SampleBudgetExhausted : public MaximinError {
 public:
  using MaximinError::MaximinError;
};

}  // namespace maximin

#endif  // MAXIMIN_ERROR_H_
