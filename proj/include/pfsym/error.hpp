// Copyright 2026 The pfsym Authors.
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

#ifndef PFSYM_ERROR_HPP
#define PFSYM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pfsym {

enum class Errc {
  kEmptyWord,
  kInvalidLetter,
  kNotParkingFunction,
  kConditionViolated,
  kInvalidMatching,
  kInvalidResult,
  kBasisMismatch,
  kLengthMismatch,
  kDegreeTooLarge,
  kNotComparable,
  kOverlappingSets,
  kInvalidPartition,
  kParseError,
};

const char* errc_name(Errc code) noexcept;

// All library failures are reported through this exception. `detail` carries
// a code-specific integer: the violated condition for kConditionViolated, the
// 0-based character offset for kParseError, otherwise 0.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, int detail = 0)
      : std::runtime_error(what), code_(code), detail_(detail) {}

  Errc code() const noexcept { return code_; }
  int detail() const noexcept { return detail_; }

 private:
  Errc code_;
  int detail_;
};

}  // namespace pfsym

#endif  // PFSYM_ERROR_HPP
