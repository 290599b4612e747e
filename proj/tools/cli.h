// Copyright 2026 The tableauxb Authors.
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

#ifndef TABLEAUXB_TOOLS_CLI_H_
#define TABLEAUXB_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace tableauxb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 1;  // also: a verification failed
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 70;

// Runs one command line. `args` excludes the program name. A file argument
// of "-" reads `in`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace tableauxb::cli

#endif  // TABLEAUXB_TOOLS_CLI_H_
