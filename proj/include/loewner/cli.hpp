// Copyright 2026 The loewner developers
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

#ifndef LOEWNER_CLI_HPP
#define LOEWNER_CLI_HPP

#include <string>
#include <vector>

#include "loewner/maps.hpp"

namespace loewner {

// Parses a CLI map address: transpose, moore-penrose, normalized-trace,
// det-shift[:alpha], vector-state[:@file], compression:@file,
// pinching:1,2|3,4 (1-based indices), kraus:@f1,@f2. `ambient_dim` supplies
// the dimension for maps that do not carry one.
MapDescriptor parse_map_descriptor(const std::string& address, std::size_t ambient_dim);

// Entry point behind the `loewner` binary. `args` excludes the program name.
// Exit codes: 0 success / expectation met, 1 verification failure, 2 usage.
int run_cli(const std::vector<std::string>& args);

}  // namespace loewner

#endif  // LOEWNER_CLI_HPP
