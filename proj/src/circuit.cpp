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

#include "smoq/circuit.hpp"

#include <algorithm>
#include <string>

#include "smoq/angles.hpp"
#include "smoq/error.hpp"

namespace smoq {

ParameterVector::ParameterVector(std::span<const double> values)
    : values_(values.begin(), values.end()) {
    for (auto &v : values_) {
        v = canonical_angle(v);
    }
}

ParameterVector::ParameterVector(std::initializer_list<double> values)
    : ParameterVector(std::span<const double>(values.begin(), values.size())) {}

double ParameterVector::at(std::size_t i) const {
    require(i < values_.size(), ErrorCode::OutOfRange,
            "parameter index " + std::to_string(i) + " out of range");
    return values_[i];
}

void ParameterVector::set(std::size_t i, double theta) {
    require(i < values_.size(), ErrorCode::OutOfRange,
            "parameter index " + std::to_string(i) + " out of range");
    values_[i] = canonical_angle(theta);
}

ParameterizedCircuit::ParameterizedCircuit(std::size_t num_qubits, std::vector<Gate> gates)
    : num_qubits_(num_qubits), gates_(std::move(gates)) {
    require(num_qubits >= 1 && num_qubits <= StateVector::kMaxQubits, ErrorCode::InvalidArgument,
            "circuit qubit count must be in [1, 20]");
    std::size_t num_params = 0;
    for (const auto &g : gates_) {
        for (auto t : g.targets) {
            require(t < num_qubits_, ErrorCode::OutOfRange,
                    "gate target " + std::to_string(t) + " out of range");
        }
        for (std::size_t a = 0; a < g.targets.size(); ++a) {
            for (std::size_t b = a + 1; b < g.targets.size(); ++b) {
                require(g.targets[a] != g.targets[b], ErrorCode::InvalidArgument,
                        "repeated gate target");
            }
        }
        if (g.is_rotation()) {
            require(g.param.has_value(), ErrorCode::InvalidArgument,
                    "rotation gate without a parameter binding");
            require(g.targets.size() == 1, ErrorCode::InvalidArgument,
                    "rotation gates act on one qubit");
            num_params = std::max(num_params, *g.param + 1);
        } else {
            require(!g.param.has_value(), ErrorCode::InvalidArgument,
                    "fixed gate bound to a parameter");
        }
    }
    usage_.assign(num_params, 0);
    for (const auto &g : gates_) {
        if (g.param) {
            ++usage_[*g.param];
        }
    }
    for (std::size_t j = 0; j < usage_.size(); ++j) {
        require(usage_[j] > 0, ErrorCode::InvalidArgument,
                "parameter " + std::to_string(j) + " is not bound to any gate");
    }
}

bool ParameterizedCircuit::parameters_independent() const noexcept {
    return std::all_of(usage_.begin(), usage_.end(), [](auto s) { return s == 1; });
}

ParameterizedCircuit ParameterizedCircuit::bind(const ParameterVector &params) const {
    require(params.size() == num_params(), ErrorCode::DimensionMismatch,
            "expected " + std::to_string(num_params()) + " parameters, got " +
                std::to_string(params.size()));
    std::vector<Gate> out;
    out.reserve(gates_.size());
    for (const auto &g : gates_) {
        if (g.is_rotation()) {
            const auto m = rotation_matrix(g.kind, params[*g.param]);
            out.push_back(Gate::unitary(g.targets, std::vector<Complex>(m.begin(), m.end())));
        } else {
            out.push_back(g);
        }
    }
    return ParameterizedCircuit(num_qubits_, std::move(out));
}

ParameterizedCircuit ParameterizedCircuit::adjoint() const {
    require(num_params() == 0, ErrorCode::Precondition,
            "adjoint requires a parameter-free (bound) circuit");
    std::vector<Gate> out;
    out.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        if (it->kind != GateKind::Unitary) {
            // H, X, CZ and CNOT are self-inverse.
            out.push_back(*it);
            continue;
        }
        const std::size_t dim = it->matrix.size() == 16 ? 4 : 2;
        std::vector<Complex> dag(it->matrix.size());
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                dag[r * dim + c] = std::conj(it->matrix[c * dim + r]);
            }
        }
        out.push_back(Gate{GateKind::Unitary, it->targets, std::nullopt, std::move(dag)});
    }
    return ParameterizedCircuit(num_qubits_, std::move(out));
}

StateVector run_circuit(const ParameterizedCircuit &circuit, const ParameterVector &params,
                        const StateVector &input) {
    require(input.num_qubits() == circuit.num_qubits(), ErrorCode::DimensionMismatch,
            "input state has " + std::to_string(input.num_qubits()) + " qubits, circuit has " +
                std::to_string(circuit.num_qubits()));
    require(params.size() == circuit.num_params(), ErrorCode::DimensionMismatch,
            "expected " + std::to_string(circuit.num_params()) + " parameters, got " +
                std::to_string(params.size()));
    StateVector state = input;
    for (const auto &g : circuit.gates()) {
        if (g.param) {
            apply_gate_inplace(state, g, params[*g.param]);
        } else {
            apply_gate_inplace(state, g, std::nullopt);
        }
    }
    return state;
}

StateVector run_circuit(const ParameterizedCircuit &circuit, const ParameterVector &params) {
    return run_circuit(circuit, params, StateVector(circuit.num_qubits()));
}

ParameterizedCircuit adjoint_compose(const ParameterizedCircuit &a, const ParameterizedCircuit &b) {
    require(a.num_qubits() == b.num_qubits(), ErrorCode::DimensionMismatch,
            "adjoint_compose: qubit counts differ");
    const auto a_dag = a.adjoint();
    std::vector<Gate> gates = b.gates();
    gates.insert(gates.end(), a_dag.gates().begin(), a_dag.gates().end());
    return ParameterizedCircuit(b.num_qubits(), std::move(gates));
}

} // namespace smoq
