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

#ifndef PFSYM_CLI_HPP
#define PFSYM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pfsym {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 on success, 1 if a verification check failed, 2 on
/// usage, parse or domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pfsym

#endif  // PFSYM_CLI_HPP
