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

#include "json.hpp"
#include "wdwvqe/eigensolver.hpp"
#include "wdwvqe/models.hpp"
#include "wdwvqe/pauli.hpp"
#include "wdwvqe/vqe.hpp"

namespace wdwvqe {

using Json = nlohmann::ordered_json;

/// [{"coeff": c, "paulis": "XY.."}, ...] in the sum's (lexicographic) order.
Json to_json(const PauliSum& sum);
/// Accepts the bare array or an object carrying it under "terms".
/// Throws InvalidArgument on malformed input.
PauliSum pauli_sum_from_json(const Json& doc);

Json to_json(const Conventions& conv);
Json to_json(const ModelSpec& spec);
Json to_json(const AnsatzSpec& spec);
Json to_json(const SpsaConfig& config);
/// Eigenvalues only (ascending), plus min and nearest-zero readings.
Json spectrum_json(const std::vector<double>& ascending);
Json to_json(const VqeResult& result);
Json to_json(const WdwReport& report);

/// "trial,iteration,energy" rows for every trial's SPSA trace.
std::string trace_csv(const VqeResult& result);

/// Fixed-width human-readable term table.
std::string pauli_table(const PauliSum& sum);

}  // namespace wdwvqe
