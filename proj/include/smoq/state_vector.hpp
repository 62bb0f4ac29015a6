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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace smoq {

using Complex = std::complex<double>;

/// Dense state vector over `num_qubits` qubits.
///
/// Qubit ordering is little-endian: qubit 0 is the least significant bit of
/// the amplitude index, so amplitude `i` belongs to the basis state whose
/// qubit `q` reads `(i >> q) & 1`.
class StateVector {
  public:
    static constexpr std::size_t kMaxQubits = 20;

    /// |0...0> on `num_qubits` qubits.
    explicit StateVector(std::size_t num_qubits);

    /// Computational basis state |index>.
    static StateVector basis(std::size_t num_qubits, std::uint64_t index);

    /// Takes ownership of `amplitudes`; the length must be a power of two and
    /// the vector must be normalized within 1e-10.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }

    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }

    [[nodiscard]] Complex operator[](std::size_t i) const { return amps_[i]; }

    [[nodiscard]] double norm_squared() const noexcept;

    /// <this|other>.
    [[nodiscard]] Complex inner(const StateVector &other) const;

    /// Probability of measuring every qubit as 0.
    [[nodiscard]] double probability_all_zeros() const noexcept { return std::norm(amps_[0]); }

    /// 2x2 row-major unitary on qubit `q`.
    void apply_matrix_1q(std::span<const Complex, 4> m, std::size_t q);

    /// 4x4 row-major unitary on (q_hi, q_lo); the local basis index is
    /// 2*bit(q_hi) + bit(q_lo).
    void apply_matrix_2q(std::span<const Complex, 16> m, std::size_t q_hi, std::size_t q_lo);

    void apply_cz(std::size_t a, std::size_t b);
    void apply_cnot(std::size_t control, std::size_t target);
    void apply_x(std::size_t q);
    void apply_h(std::size_t q);

  private:
    StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes)
        : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {}

    void check_qubit(std::size_t q) const;

    std::size_t num_qubits_;
    std::vector<Complex> amps_;
};

/// Squared overlap |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

} // namespace smoq
