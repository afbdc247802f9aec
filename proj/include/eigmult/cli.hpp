// Copyright 2026 The eigmult Authors
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

#ifndef EIGMULT_CLI_HPP
#define EIGMULT_CLI_HPP

#include <ostream>

namespace eigmult {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitHypothesis = 2;
inline constexpr int kExitOracleMismatch = 3;

/// Entry point of the `eigmult` tool. Subcommands: invariants, multiplicity, classify,
/// build, sweep, check-identities. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eigmult

#endif  // EIGMULT_CLI_HPP
