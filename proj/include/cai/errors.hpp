/* Copyright 2026 The cai-init Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef CAI_ERRORS_HPP_
#define CAI_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cai {

// Precondition violated by the caller (bad shape, rank, non-finite scalar).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical procedure failed (non-convergence, degenerate statistic).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown scheme/policy names and inconsistent InitSpec fields.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed array file. offset() is the byte position where parsing stopped.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace cai

#endif  // CAI_ERRORS_HPP_
