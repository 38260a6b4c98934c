// Copyright 2026 The dworkgeom Authors.
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

#ifndef DWORKGEOM_ERRORS_H_
#define DWORKGEOM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dworkgeom {

// Raised when a computation cannot produce a certified answer.
class ComputationError : public std::runtime_error {
 public:
  explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised for malformed literals and violated preconditions on user input.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace dworkgeom

#endif  // DWORKGEOM_ERRORS_H_
