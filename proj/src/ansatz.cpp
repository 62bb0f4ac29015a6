// Copyright 2026 The smoq Authors.
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

#include <vector>

#include "smoq/error.hpp"
#include "smoq/tasks.hpp"

namespace smoq {

ParameterizedCircuit build_ansatz(const AnsatzSpec &spec) {
    require(spec.qubits >= 1, ErrorCode::InvalidArgument, "ansatz needs at least one qubit");
    std::vector<Gate> gates;
    std::size_t p = 0;
    auto rotation_layer = [&] {
        for (std::size_t q = 0; q < spec.qubits; ++q) {
            gates.push_back(Gate::rx(q, p++));
            gates.push_back(Gate::rz(q, p++));
        }
    };
    rotation_layer();
    for (std::size_t d = 0; d < spec.depth; ++d) {
        for (std::size_t q = 0; q + 1 < spec.qubits; ++q) {
            gates.push_back(Gate::cz(q, q + 1));
        }
        rotation_layer();
    }
    return ParameterizedCircuit(spec.qubits, std::move(gates));
}

} // namespace smoq
