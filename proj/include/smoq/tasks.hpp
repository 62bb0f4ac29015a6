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

#pragma once

#include <cstddef>
#include <string>

#include "smoq/circuit.hpp"
#include "smoq/observable.hpp"
#include "smoq/sampling.hpp"

namespace smoq {

/// Hardware-efficient RX/RZ/CZ ansatz: an RX-RZ layer on every qubit, then
/// `depth` blocks of [CZ ladder (0,1), (1,2), ..., (r-2,r-1); RX-RZ layer].
/// Every rotation has its own parameter, 2 r (D + 1) in total.
struct AnsatzSpec {
    std::size_t qubits = 1;
    std::size_t depth = 0;

    [[nodiscard]] std::size_t num_params() const noexcept { return 2 * qubits * (depth + 1); }
};

ParameterizedCircuit build_ansatz(const AnsatzSpec &spec);

/// n angles drawn uniformly from [0, 2 pi), stored canonicalized.
ParameterVector random_angles(std::size_t n, Rng &rng);

/// Fidelity task against the ansatz at a random target theta* ~ U[0, 2 pi).
FidelityCostSpec make_task1(const ParameterizedCircuit &ansatz, Rng &rng);

struct VqeTask {
    Observable hamiltonian;
    CostSpec spec;
    GroundTruth truth;
};

/// Single-term VQE cost (w = 1, |0...0> input) plus the exact ground state.
VqeTask make_task2(const Observable &hamiltonian, const ParameterizedCircuit &ansatz);
VqeTask make_task2(const std::string &hamiltonian_file, const ParameterizedCircuit &ansatz);

} // namespace smoq
