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

#include "smoq/gate.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "smoq/error.hpp"

namespace smoq {

std::string_view gate_name(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::H:
        return "h";
    case GateKind::X:
        return "x";
    case GateKind::CZ:
        return "cz";
    case GateKind::CNOT:
        return "cnot";
    case GateKind::RX:
        return "rx";
    case GateKind::RY:
        return "ry";
    case GateKind::RZ:
        return "rz";
    case GateKind::Unitary:
        return "unitary";
    }
    return "?";
}

bool is_unitary(const std::vector<Complex> &m, std::size_t dim, double tol) {
    if (m.size() != dim * dim) {
        return false;
    }
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < dim; ++k) {
                acc += std::conj(m[k * dim + r]) * m[k * dim + c];
            }
            const Complex expected = (r == c) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            if (std::abs(acc - expected) > tol) {
                return false;
            }
        }
    }
    return true;
}

Gate Gate::unitary(std::vector<std::size_t> targets, std::vector<Complex> m) {
    require(targets.size() == 1 || targets.size() == 2, ErrorCode::InvalidArgument,
            "unitary gates act on one or two qubits");
    const std::size_t dim = std::size_t{1} << targets.size();
    require(m.size() == dim * dim, ErrorCode::DimensionMismatch,
            "unitary matrix has wrong size for its targets");
    require(is_unitary(m, dim), ErrorCode::InvalidArgument, "matrix is not unitary");
    return {GateKind::Unitary, std::move(targets), std::nullopt, std::move(m)};
}

Matrix2 rotation_matrix(GateKind kind, double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const Complex i{0.0, 1.0};
    switch (kind) {
    case GateKind::RX:
        return {c, -i * s, -i * s, c};
    case GateKind::RY:
        return {c, -s, s, c};
    case GateKind::RZ:
        return {Complex{c, -s}, 0.0, 0.0, Complex{c, s}};
    default:
        fail(ErrorCode::InvalidArgument, "not a rotation gate");
    }
}

Matrix2 rotation_generator(GateKind kind) {
    const Complex i{0.0, 1.0};
    switch (kind) {
    case GateKind::RX:
        return {0.0, 1.0, 1.0, 0.0};
    case GateKind::RY:
        return {0.0, -i, i, 0.0};
    case GateKind::RZ:
        return {1.0, 0.0, 0.0, -1.0};
    default:
        fail(ErrorCode::InvalidArgument, "not a rotation gate");
    }
}

std::vector<Complex> fixed_matrix(const Gate &gate) {
    const double s = 1.0 / std::numbers::sqrt2;
    switch (gate.kind) {
    case GateKind::H:
        return {s, s, s, -s};
    case GateKind::X:
        return {0.0, 1.0, 1.0, 0.0};
    case GateKind::CZ:
        return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1};
    case GateKind::CNOT:
        // targets = (control, target); control is the high local bit.
        return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
    case GateKind::Unitary:
        return gate.matrix;
    default:
        fail(ErrorCode::InvalidArgument, "rotation gates have no fixed matrix");
    }
}

namespace {

void check_arity(const Gate &gate) {
    std::size_t expected = 1;
    switch (gate.kind) {
    case GateKind::CZ:
    case GateKind::CNOT:
        expected = 2;
        break;
    case GateKind::Unitary:
        expected = gate.matrix.size() == 16 ? 2 : 1;
        break;
    default:
        break;
    }
    if (gate.targets.size() != expected) {
        fail(ErrorCode::InvalidArgument, std::string("gate '") + std::string(gate_name(gate.kind)) +
                                             "' expects " + std::to_string(expected) +
                                             " target(s)");
    }
}

} // namespace

void apply_gate_inplace(StateVector &state, const Gate &gate, std::optional<double> angle) {
    check_arity(gate);
    for (auto q : gate.targets) {
        if (q >= state.num_qubits()) {
            fail(ErrorCode::OutOfRange, "gate target " + std::to_string(q) + " out of range");
        }
    }
    if (gate.is_rotation()) {
        require(angle.has_value(), ErrorCode::InvalidArgument, "rotation gate needs an angle");
        const auto m = rotation_matrix(gate.kind, *angle);
        state.apply_matrix_1q(m, gate.targets[0]);
        return;
    }
    require(!angle.has_value(), ErrorCode::InvalidArgument, "fixed gate takes no angle");
    switch (gate.kind) {
    case GateKind::H:
        state.apply_h(gate.targets[0]);
        break;
    case GateKind::X:
        state.apply_x(gate.targets[0]);
        break;
    case GateKind::CZ:
        state.apply_cz(gate.targets[0], gate.targets[1]);
        break;
    case GateKind::CNOT:
        state.apply_cnot(gate.targets[0], gate.targets[1]);
        break;
    case GateKind::Unitary:
        if (gate.matrix.size() == 4) {
            state.apply_matrix_1q(std::span<const Complex, 4>(gate.matrix.data(), 4),
                                  gate.targets[0]);
        } else {
            state.apply_matrix_2q(std::span<const Complex, 16>(gate.matrix.data(), 16),
                                  gate.targets[0], gate.targets[1]);
        }
        break;
    default:
        break;
    }
}

StateVector apply_gate(StateVector state, const Gate &gate, std::optional<double> angle) {
    apply_gate_inplace(state, gate, angle);
    return state;
}

} // namespace smoq
