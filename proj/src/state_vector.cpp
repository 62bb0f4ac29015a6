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

#include "smoq/state_vector.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "smoq/error.hpp"

namespace smoq {

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    require(num_qubits >= 1 && num_qubits <= kMaxQubits, ErrorCode::InvalidArgument,
            "number of qubits must be in [1, 20], got " + std::to_string(num_qubits));
    amps_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector StateVector::basis(std::size_t num_qubits, std::uint64_t index) {
    StateVector s(num_qubits);
    require(index < s.dimension(), ErrorCode::OutOfRange, "basis index out of range");
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t n = amplitudes.size();
    require(n >= 2 && std::has_single_bit(n), ErrorCode::DimensionMismatch,
            "amplitude count must be a power of two >= 2, got " + std::to_string(n));
    const auto qubits = static_cast<std::size_t>(std::countr_zero(n));
    require(qubits <= kMaxQubits, ErrorCode::InvalidArgument, "too many qubits");
    double norm = 0.0;
    for (const auto &a : amplitudes) {
        norm += std::norm(a);
    }
    require(std::abs(norm - 1.0) < 1e-10, ErrorCode::InvalidArgument,
            "state is not normalized");
    return StateVector(qubits, std::move(amplitudes));
}

double StateVector::norm_squared() const noexcept {
    double n = 0.0;
    for (const auto &a : amps_) {
        n += std::norm(a);
    }
    return n;
}

Complex StateVector::inner(const StateVector &other) const {
    require(other.dimension() == dimension(), ErrorCode::DimensionMismatch,
            "inner product of states with different dimensions");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        acc += std::conj(amps_[i]) * other.amps_[i];
    }
    return acc;
}

void StateVector::check_qubit(std::size_t q) const {
    if (q >= num_qubits_) {
        fail(ErrorCode::OutOfRange, "qubit " + std::to_string(q) + " out of range for " +
                                        std::to_string(num_qubits_) + "-qubit state");
    }
}

void StateVector::apply_matrix_1q(std::span<const Complex, 4> m, std::size_t q) {
    check_qubit(q);
    const std::size_t stride = std::size_t{1} << q;
    const std::size_t n = amps_.size();
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex a0 = amps_[i];
            const Complex a1 = amps_[i + stride];
            amps_[i] = m[0] * a0 + m[1] * a1;
            amps_[i + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

void StateVector::apply_matrix_2q(std::span<const Complex, 16> m, std::size_t q_hi,
                                  std::size_t q_lo) {
    check_qubit(q_hi);
    check_qubit(q_lo);
    require(q_hi != q_lo, ErrorCode::InvalidArgument, "two-qubit gate on a single qubit");
    const std::size_t hi = std::size_t{1} << q_hi;
    const std::size_t lo = std::size_t{1} << q_lo;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & hi) != 0 || (i & lo) != 0) {
            continue;
        }
        const std::size_t idx[4] = {i, i | lo, i | hi, i | hi | lo};
        Complex in[4];
        for (int k = 0; k < 4; ++k) {
            in[k] = amps_[idx[k]];
        }
        for (int r = 0; r < 4; ++r) {
            Complex acc{0.0, 0.0};
            for (int c = 0; c < 4; ++c) {
                acc += m[static_cast<std::size_t>(4 * r + c)] * in[c];
            }
            amps_[idx[r]] = acc;
        }
    }
}

void StateVector::apply_cz(std::size_t a, std::size_t b) {
    check_qubit(a);
    check_qubit(b);
    require(a != b, ErrorCode::InvalidArgument, "CZ on a single qubit");
    const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == mask) {
            amps_[i] = -amps_[i];
        }
    }
}

void StateVector::apply_cnot(std::size_t control, std::size_t target) {
    check_qubit(control);
    check_qubit(target);
    require(control != target, ErrorCode::InvalidArgument, "CNOT control equals target");
    const std::size_t c = std::size_t{1} << control;
    const std::size_t t = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & c) != 0 && (i & t) == 0) {
            std::swap(amps_[i], amps_[i | t]);
        }
    }
}

void StateVector::apply_x(std::size_t q) {
    check_qubit(q);
    const std::size_t t = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & t) == 0) {
            std::swap(amps_[i], amps_[i | t]);
        }
    }
}

void StateVector::apply_h(std::size_t q) {
    const double s = 1.0 / std::numbers::sqrt2;
    const Complex m[4] = {s, s, s, -s};
    apply_matrix_1q(std::span<const Complex, 4>(m, 4), q);
}

double fidelity(const StateVector &a, const StateVector &b) { return std::norm(a.inner(b)); }

} // namespace smoq
