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

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "smoq/state_vector.hpp"

namespace smoq {

enum class GateKind { H, X, CZ, CNOT, RX, RY, RZ, Unitary };

/// Lowercase name used in circuit files ("h", "rx", ...). Unitary is "unitary".
std::string_view gate_name(GateKind kind) noexcept;

[[nodiscard]] constexpr bool is_rotation(GateKind kind) noexcept {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

/// One circuit element. Rotation gates exp(-i theta/2 P) with P in {X, Y, Z}
/// carry the index of the circuit parameter they read; fixed gates carry none.
/// Unitary gates hold a row-major 2x2 or 4x4 matrix (see
/// StateVector::apply_matrix_2q for the two-qubit index convention).
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<std::size_t> targets;
    std::optional<std::size_t> param;
    std::vector<Complex> matrix;

    static Gate h(std::size_t q) { return {GateKind::H, {q}, std::nullopt, {}}; }
    static Gate x(std::size_t q) { return {GateKind::X, {q}, std::nullopt, {}}; }
    static Gate cz(std::size_t a, std::size_t b) { return {GateKind::CZ, {a, b}, std::nullopt, {}}; }
    static Gate cnot(std::size_t control, std::size_t target) {
        return {GateKind::CNOT, {control, target}, std::nullopt, {}};
    }
    static Gate rx(std::size_t q, std::size_t param) { return {GateKind::RX, {q}, param, {}}; }
    static Gate ry(std::size_t q, std::size_t param) { return {GateKind::RY, {q}, param, {}}; }
    static Gate rz(std::size_t q, std::size_t param) { return {GateKind::RZ, {q}, param, {}}; }

    /// Arbitrary fixed unitary; throws unless `m` is unitary within 1e-12.
    static Gate unitary(std::vector<std::size_t> targets, std::vector<Complex> m);

    [[nodiscard]] bool is_rotation() const noexcept { return smoq::is_rotation(kind); }
};

using Matrix2 = std::array<Complex, 4>;

/// exp(-i theta/2 P) as a 2x2 row-major matrix.
Matrix2 rotation_matrix(GateKind kind, double theta);

/// The Pauli generator P of a rotation gate.
Matrix2 rotation_generator(GateKind kind);

/// Dense row-major matrix of a fixed (non-rotation) gate on its own targets.
std::vector<Complex> fixed_matrix(const Gate &gate);

/// Applies `gate` to `state` in place. `angle` must be given exactly when the
/// gate is a rotation.
void apply_gate_inplace(StateVector &state, const Gate &gate, std::optional<double> angle);

/// Value-returning form of apply_gate_inplace.
StateVector apply_gate(StateVector state, const Gate &gate, std::optional<double> angle);

/// Checks that a row-major dim x dim matrix is unitary within `tol`.
bool is_unitary(const std::vector<Complex> &m, std::size_t dim, double tol = 1e-12);

} // namespace smoq
