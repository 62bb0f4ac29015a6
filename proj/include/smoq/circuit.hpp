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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "smoq/gate.hpp"
#include "smoq/state_vector.hpp"

namespace smoq {

/// Circuit parameters in radians. Every write is canonicalized to [-pi, pi).
class ParameterVector {
  public:
    ParameterVector() = default;
    explicit ParameterVector(std::size_t size) : values_(size, 0.0) {}
    explicit ParameterVector(std::span<const double> values);
    ParameterVector(std::initializer_list<double> values);

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
    [[nodiscard]] double at(std::size_t i) const;
    void set(std::size_t i, double theta);

    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

    bool operator==(const ParameterVector &) const = default;

  private:
    std::vector<double> values_;
};

/// Ordered gate list plus the rotation-slot -> parameter binding. Several
/// rotation slots may read the same parameter; every parameter index in
/// [0, num_params) must be read by at least one slot.
class ParameterizedCircuit {
  public:
    explicit ParameterizedCircuit(std::size_t num_qubits) : ParameterizedCircuit(num_qubits, {}) {}

    /// `num_params` defaults to (largest bound index + 1).
    ParameterizedCircuit(std::size_t num_qubits, std::vector<Gate> gates);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t num_params() const noexcept { return usage_.size(); }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept { return gates_; }

    /// S_j: number of rotation slots bound to each parameter.
    [[nodiscard]] const std::vector<std::size_t> &usage_counts() const noexcept { return usage_; }

    /// True when every parameter drives exactly one rotation gate.
    [[nodiscard]] bool parameters_independent() const noexcept;

    /// Replaces every rotation by the fixed unitary it evaluates to at `params`.
    [[nodiscard]] ParameterizedCircuit bind(const ParameterVector &params) const;

    /// Reversed, conjugate-transposed circuit. The circuit must be parameter-free.
    [[nodiscard]] ParameterizedCircuit adjoint() const;

  private:
    std::size_t num_qubits_;
    std::vector<Gate> gates_;
    std::vector<std::size_t> usage_;
};

/// Applies `circuit` at `params` to `input`.
StateVector run_circuit(const ParameterizedCircuit &circuit, const ParameterVector &params,
                        const StateVector &input);

/// Runs on |0...0>.
StateVector run_circuit(const ParameterizedCircuit &circuit, const ParameterVector &params);

/// Circuit that runs `b` and then the adjoint of the parameter-free circuit
/// `a`. The result has `b`'s parameters.
ParameterizedCircuit adjoint_compose(const ParameterizedCircuit &a, const ParameterizedCircuit &b);

/// Circuit file format:
///   {"qubits": r, "gates": [{"type": "rx", "targets": [0], "param": 0}, ...]}
/// Parameter indices are 0-based; fixed gates carry "param": null.
ParameterizedCircuit circuit_from_json(const std::string &text);
std::string circuit_to_json(const ParameterizedCircuit &circuit);
ParameterizedCircuit load_circuit(const std::string &path);

} // namespace smoq
