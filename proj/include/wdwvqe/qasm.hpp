// Copyright 2026 The wdwvqe Authors
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

#pragma once

#include <string>
#include <vector>

#include "wdwvqe/simulator.hpp"

namespace wdwvqe {

/// OpenQASM 2.0 text for `circuit`. Each entry of `header_comments` becomes
/// a `// ...` line after the version statement. Angles are printed with 17
/// significant digits so the listing round-trips to the same doubles.
std::string to_openqasm(const Circuit& circuit,
                        const std::vector<std::string>& header_comments = {});

}  // namespace wdwvqe
