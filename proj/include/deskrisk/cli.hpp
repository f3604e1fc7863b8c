// Copyright 2026 The deskrisk Authors
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

// Command-line front end. Exit codes are a stable contract:
//   0  solved (Optimal or Feasible) / instance valid
//   1  input error: bad flags, unreadable or invalid files
//   2  Infeasible
//   3  solver error: a baseline raised its err flag, or the LP failed

#ifndef DESKRISK_CLI_HPP_
#define DESKRISK_CLI_HPP_

#include <iosfwd>

namespace deskrisk {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitSolverError = 3;

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace deskrisk

#endif  // DESKRISK_CLI_HPP_
