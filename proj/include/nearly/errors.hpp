// Copyright 2026 The nearly Authors
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

#ifndef NEARLY_ERRORS_HPP
#define NEARLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nearly {

// Malformed arguments: out-of-range vertices, self-loops, invalid family
// parameters, unknown theorem ids.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Text that does not decode as graph6 or edge-list.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// A request beyond a configured size cap (brute-force limits, enumeration
// order, canonical-form order).
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace nearly

#endif  // NEARLY_ERRORS_HPP
