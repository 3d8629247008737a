// Copyright 2026 The hypernim Authors.
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

#ifndef HYPERNIM_TOOLS_CLI_H_
#define HYPERNIM_TOOLS_CLI_H_

#include <iosfwd>

namespace hypernim::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

// Runs the hypernim command line. `in` feeds the play subcommand.
int Run(int argc, const char* const* argv, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace hypernim::cli

#endif  // HYPERNIM_TOOLS_CLI_H_
