// Copyright 2026 The rrcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef RRCC_CLI_CLI_HPP
#define RRCC_CLI_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>

namespace rrcc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs the rrcc command line and returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// --budget wins over RRCC_BUDGET, which wins over the library default.
std::uint64_t resolve_budget(std::optional<std::uint64_t> flag, const char* env);

}  // namespace rrcc::cli

#endif  // RRCC_CLI_CLI_HPP
