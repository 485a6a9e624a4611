// Copyright 2026 The owc Authors.
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

#ifndef OWC_CLI_HPP_
#define OWC_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace owc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Entry point for the owc tool. `args` excludes the program name. Returns
// 0 when everything passed, 1 when any verdict failed, 2 on usage or input
// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace owc::cli

#endif  // OWC_CLI_HPP_
