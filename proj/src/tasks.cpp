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

#include "smoq/tasks.hpp"

#include <random>

#include "smoq/angles.hpp"
#include "smoq/error.hpp"

namespace smoq {

ParameterVector random_angles(std::size_t n, Rng &rng) {
    std::uniform_real_distribution<double> dist(0.0, kTwoPi);
    std::vector<double> v(n);
    for (auto &x : v) {
        x = dist(rng);
    }
    return ParameterVector(v);
}

FidelityCostSpec make_task1(const ParameterizedCircuit &ansatz, Rng &rng) {
    return FidelityCostSpec(ansatz, random_angles(ansatz.num_params(), rng));
}

VqeTask make_task2(const Observable &hamiltonian, const ParameterizedCircuit &ansatz) {
    require(hamiltonian.num_qubits() == ansatz.num_qubits(), ErrorCode::DimensionMismatch,
            "Hamiltonian acts on " + std::to_string(hamiltonian.num_qubits()) +
                " qubits, ansatz has " + std::to_string(ansatz.num_qubits()));
    auto truth = ground_truth(hamiltonian);
    return VqeTask{hamiltonian, CostSpec::single(hamiltonian), std::move(truth)};
}

VqeTask make_task2(const std::string &hamiltonian_file, const ParameterizedCircuit &ansatz) {
    return make_task2(load_observable(hamiltonian_file), ansatz);
}

} // namespace smoq
