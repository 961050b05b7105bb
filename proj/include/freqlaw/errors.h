// Copyright 2026 The Freqlaw Authors.
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

#ifndef FREQLAW_ERRORS_H_
#define FREQLAW_ERRORS_H_

#include <stdexcept>
#include <string>

namespace freqlaw {

// A caller passed a parameter outside the documented domain.
class InvalidArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The data itself does not support the requested estimate (empty cells,
// missing singletons, malformed input).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace freqlaw

#endif  // FREQLAW_ERRORS_H_
