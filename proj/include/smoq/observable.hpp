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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "smoq/circuit.hpp"
#include "smoq/state_vector.hpp"

namespace smoq {

/// Tensor product of single-qubit Paulis. Character k of the label acts on
/// qubit k, so "XZ" is X on qubit 0 and Z on qubit 1.
class PauliString {
  public:
    explicit PauliString(std::string_view label);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return label_.size(); }
    [[nodiscard]] const std::string &label() const noexcept { return label_; }
    [[nodiscard]] char op(std::size_t q) const { return label_.at(q); }

    /// Qubits carrying X or Y (bit flips).
    [[nodiscard]] std::uint64_t flip_mask() const noexcept { return flip_; }
    /// Qubits carrying Y or Z (sign flips in the computational basis).
    [[nodiscard]] std::uint64_t phase_mask() const noexcept { return phase_; }
    /// Qubits carrying anything other than I.
    [[nodiscard]] std::uint64_t support_mask() const noexcept { return flip_ | phase_; }
    [[nodiscard]] std::size_t num_y() const noexcept { return num_y_; }
    [[nodiscard]] bool is_identity() const noexcept { return support_mask() == 0; }

  private:
    std::string label_;
    std::uint64_t flip_ = 0;
    std::uint64_t phase_ = 0;
    std::size_t num_y_ = 0;
};

struct PauliTerm {
    double coeff = 0.0;
    PauliString pauli;
};

/// Real-weighted Pauli sum; Hermitian by construction.
class Observable {
  public:
    Observable(std::size_t num_qubits, std::vector<PauliTerm> terms);

    /// Single Pauli string with coefficient `coeff`.
    static Observable pauli(std::string_view label, double coeff = 1.0);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const std::vector<PauliTerm> &terms() const noexcept { return terms_; }

  private:
    std::size_t num_qubits_;
    std::vector<PauliTerm> terms_;
};

/// One term w_k <phi_k| U^dag H_k U |phi_k> of a cost function.
struct CostTerm {
    double weight = 1.0;
    Observable observable;
    StateVector input;
};

/// Weighted sum of expectation values.
class CostSpec {
  public:
    explicit CostSpec(std::vector<CostTerm> terms);

    /// w = 1, input |0...0>.
    static CostSpec single(Observable observable);

    [[nodiscard]] const std::vector<CostTerm> &terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t num_qubits() const noexcept { return terms_.front().input.num_qubits(); }

  private:
    std::vector<CostTerm> terms_;
};

/// Cost -|<0| U^dag(theta*) U(theta) |0>|^2 against a fixed target circuit.
class FidelityCostSpec {
  public:
    FidelityCostSpec(const ParameterizedCircuit &target, const ParameterVector &target_params);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return bound_target_.num_qubits(); }
    /// The target circuit with its parameters substituted.
    [[nodiscard]] const ParameterizedCircuit &bound_target() const noexcept { return bound_target_; }
    [[nodiscard]] const ParameterVector &target_params() const noexcept { return target_params_; }
    /// U(theta*)|0...0>.
    [[nodiscard]] const StateVector &target_state() const noexcept { return target_state_; }

  private:
    ParameterizedCircuit bound_target_;
    ParameterVector target_params_;
    StateVector target_state_;
};

/// <psi|P|psi> for a single Pauli string.
double pauli_expectation(const StateVector &state, const PauliString &pauli);

/// <psi|H|psi>; throws if the imaginary residue exceeds 1e-10.
double exact_expectation(const StateVector &state, const Observable &obs);

double cost_exact(const ParameterizedCircuit &circuit, const ParameterVector &params,
                  const CostSpec &spec);

double fidelity_cost_exact(const ParameterizedCircuit &circuit, const ParameterVector &params,
                           const FidelityCostSpec &spec);

/// Dense 2^r x 2^r matrix in the little-endian basis.
Eigen::MatrixXcd dense_matrix(const Observable &obs);

struct GroundTruth {
    double energy;
    StateVector state;
};

/// Lowest eigenpair by dense diagonalization; r <= 12.
GroundTruth ground_truth(const Observable &obs);

/// Hamiltonian file format:
///   {"qubits": r, "terms": [{"pauli": "XZIY", "coeff": -0.4}, ...]}
Observable observable_from_json(const std::string &text);
std::string observable_to_json(const Observable &obs);
Observable load_observable(const std::string &path);

/// -sum_i Z_i Z_{i+1} - field * sum_i X_i on an open chain.
Observable transverse_field_ising(std::size_t num_qubits, double field = 1.0);

} // namespace smoq
