// Copyright 2026 The Spectral Markov Authors
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

namespace spectral_markov {

// Raised when a numeric parameter is outside the documented domain
// (e.g. p > n for an Erdos-Renyi sample, c <= 0 for a Markov kernel).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a structured input violates an operation's precondition
// (non-symmetric matrix, disconnected component, mismatched sizes).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a request exceeds a fixed computational cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace spectral_markov
