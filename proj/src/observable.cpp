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

#include "smoq/observable.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "smoq/error.hpp"

namespace smoq {

PauliString::PauliString(std::string_view label) : label_(label) {
    require(!label_.empty() && label_.size() <= StateVector::kMaxQubits,
            ErrorCode::InvalidArgument, "Pauli label length must be in [1, 20]");
    for (std::size_t q = 0; q < label_.size(); ++q) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        switch (label_[q]) {
        case 'I':
            break;
        case 'X':
            flip_ |= bit;
            break;
        case 'Y':
            flip_ |= bit;
            phase_ |= bit;
            ++num_y_;
            break;
        case 'Z':
            phase_ |= bit;
            break;
        default:
            fail(ErrorCode::InvalidArgument,
                 "invalid Pauli character '" + std::string(1, label_[q]) + "' in '" + label_ + "'");
        }
    }
}

Observable::Observable(std::size_t num_qubits, std::vector<PauliTerm> terms)
    : num_qubits_(num_qubits), terms_(std::move(terms)) {
    require(num_qubits >= 1, ErrorCode::InvalidArgument, "observable needs at least one qubit");
    for (const auto &t : terms_) {
        require(t.pauli.num_qubits() == num_qubits_, ErrorCode::DimensionMismatch,
                "Pauli term '" + t.pauli.label() + "' does not act on " +
                    std::to_string(num_qubits_) + " qubits");
        require(std::isfinite(t.coeff), ErrorCode::InvalidArgument, "non-finite coefficient");
    }
}

Observable Observable::pauli(std::string_view label, double coeff) {
    PauliString p(label);
    const auto n = p.num_qubits();
    return Observable(n, {PauliTerm{coeff, std::move(p)}});
}

CostSpec::CostSpec(std::vector<CostTerm> terms) : terms_(std::move(terms)) {
    require(!terms_.empty(), ErrorCode::InvalidArgument, "cost needs at least one term");
    const auto r = terms_.front().input.num_qubits();
    for (const auto &t : terms_) {
        require(t.input.num_qubits() == r && t.observable.num_qubits() == r,
                ErrorCode::DimensionMismatch, "cost terms disagree on the qubit count");
        require(std::abs(t.input.norm_squared() - 1.0) < 1e-10, ErrorCode::InvalidArgument,
                "cost input state is not normalized");
    }
}

CostSpec CostSpec::single(Observable observable) {
    StateVector zero(observable.num_qubits());
    return CostSpec({CostTerm{1.0, std::move(observable), std::move(zero)}});
}

FidelityCostSpec::FidelityCostSpec(const ParameterizedCircuit &target,
                                   const ParameterVector &target_params)
    : bound_target_(target.bind(target_params)), target_params_(target_params),
      target_state_(run_circuit(bound_target_, ParameterVector{})) {}

namespace {

Complex pauli_expectation_complex(const StateVector &state, const PauliString &pauli) {
    require(state.num_qubits() == pauli.num_qubits(), ErrorCode::DimensionMismatch,
            "Pauli string and state disagree on the qubit count");
    const auto amps = state.amplitudes();
    const std::uint64_t f = pauli.flip_mask();
    const std::uint64_t z = pauli.phase_mask();
    Complex acc{0.0, 0.0};
    for (std::uint64_t x = 0; x < amps.size(); ++x) {
        const double sign = (std::popcount(x & z) & 1) ? -1.0 : 1.0;
        acc += std::conj(amps[x ^ f]) * amps[x] * sign;
    }
    // i^{#Y}
    static const Complex ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return acc * ipow[pauli.num_y() % 4];
}

} // namespace

double pauli_expectation(const StateVector &state, const PauliString &pauli) {
    return pauli_expectation_complex(state, pauli).real();
}

double exact_expectation(const StateVector &state, const Observable &obs) {
    require(state.num_qubits() == obs.num_qubits(), ErrorCode::DimensionMismatch,
            "observable acts on " + std::to_string(obs.num_qubits()) + " qubits, state has " +
                std::to_string(state.num_qubits()));
    Complex acc{0.0, 0.0};
    for (const auto &t : obs.terms()) {
        acc += t.coeff * pauli_expectation_complex(state, t.pauli);
    }
    require(std::abs(acc.imag()) < 1e-10, ErrorCode::Precondition,
            "expectation has a non-negligible imaginary part");
    return acc.real();
}

double cost_exact(const ParameterizedCircuit &circuit, const ParameterVector &params,
                  const CostSpec &spec) {
    double total = 0.0;
    for (const auto &t : spec.terms()) {
        total += t.weight * exact_expectation(run_circuit(circuit, params, t.input), t.observable);
    }
    return total;
}

double fidelity_cost_exact(const ParameterizedCircuit &circuit, const ParameterVector &params,
                           const FidelityCostSpec &spec) {
    require(circuit.num_qubits() == spec.num_qubits(), ErrorCode::DimensionMismatch,
            "fidelity cost: qubit counts differ");
    // <0|U^dag(theta*) U(theta)|0> is the overlap with the cached target state.
    return -fidelity(spec.target_state(), run_circuit(circuit, params));
}

Eigen::MatrixXcd dense_matrix(const Observable &obs) {
    const std::size_t dim = std::size_t{1} << obs.num_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    static const Complex ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (const auto &t : obs.terms()) {
        const auto f = t.pauli.flip_mask();
        const auto z = t.pauli.phase_mask();
        const Complex base = t.coeff * ipow[t.pauli.num_y() % 4];
        for (std::uint64_t x = 0; x < dim; ++x) {
            const double sign = (std::popcount(x & z) & 1) ? -1.0 : 1.0;
            m(static_cast<Eigen::Index>(x ^ f), static_cast<Eigen::Index>(x)) += base * sign;
        }
    }
    return m;
}

GroundTruth ground_truth(const Observable &obs) {
    require(obs.num_qubits() <= 12, ErrorCode::InvalidArgument,
            "dense diagonalization limited to 12 qubits");
    const Eigen::MatrixXcd m = dense_matrix(obs);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    require(solver.info() == Eigen::Success, ErrorCode::Precondition,
            "eigensolver did not converge");
    const Eigen::VectorXcd v = solver.eigenvectors().col(0).normalized();
    std::vector<Complex> amps(v.data(), v.data() + v.size());
    return {solver.eigenvalues()(0), StateVector::from_amplitudes(std::move(amps))};
}

Observable transverse_field_ising(std::size_t num_qubits, double field) {
    require(num_qubits >= 1, ErrorCode::InvalidArgument, "Ising chain needs at least one qubit");
    std::vector<PauliTerm> terms;
    for (std::size_t i = 0; i + 1 < num_qubits; ++i) {
        std::string label(num_qubits, 'I');
        label[i] = 'Z';
        label[i + 1] = 'Z';
        terms.push_back({-1.0, PauliString(label)});
    }
    for (std::size_t i = 0; i < num_qubits; ++i) {
        std::string label(num_qubits, 'I');
        label[i] = 'X';
        terms.push_back({-field, PauliString(label)});
    }
    return Observable(num_qubits, std::move(terms));
}

} // namespace smoq
