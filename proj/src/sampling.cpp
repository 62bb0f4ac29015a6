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

#include "smoq/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "smoq/error.hpp"

namespace smoq {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(master) ^ (stream + 0x632be59bd9b4e019ULL));
}

std::string bitstring(std::uint64_t index, std::size_t num_qubits) {
    std::string s(num_qubits, '0');
    for (std::size_t q = 0; q < num_qubits; ++q) {
        if ((index >> q) & 1U) {
            s[q] = '1';
        }
    }
    return s;
}

std::map<std::string, std::uint64_t> sample_bitstrings(const StateVector &state,
                                                       std::uint64_t shots, Rng &rng) {
    require(shots >= 1, ErrorCode::InvalidArgument, "shots must be >= 1");
    std::vector<double> probs(state.dimension());
    for (std::size_t i = 0; i < probs.size(); ++i) {
        probs[i] = std::norm(state[i]);
    }
    std::discrete_distribution<std::uint64_t> dist(probs.begin(), probs.end());
    std::vector<std::uint64_t> counts(probs.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        ++counts[dist(rng)];
    }
    std::map<std::string, std::uint64_t> hist;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] > 0) {
            hist.emplace(bitstring(i, state.num_qubits()), counts[i]);
        }
    }
    return hist;
}

namespace {

std::uint64_t draw_binomial(std::uint64_t shots, double p, Rng &rng) {
    // Simulator round-off must not turn a deterministic outcome into a
    // random one.
    constexpr double kSnap = 1e-12;
    if (p <= kSnap) {
        return 0;
    }
    if (p >= 1.0 - kSnap) {
        return shots;
    }
    std::binomial_distribution<std::uint64_t> dist(shots, p);
    return dist(rng);
}

// Sampled <P>: rotate into the Z basis on the support and read the parity.
double sample_pauli(const StateVector &state, const PauliString &pauli, std::uint64_t shots,
                    Rng &rng) {
    if (pauli.is_identity()) {
        return 1.0;
    }
    StateVector rotated = state;
    const Complex sdag[4] = {1.0, 0.0, 0.0, Complex{0.0, -1.0}};
    for (std::size_t q = 0; q < pauli.num_qubits(); ++q) {
        switch (pauli.op(q)) {
        case 'X':
            rotated.apply_h(q);
            break;
        case 'Y':
            rotated.apply_matrix_1q(std::span<const Complex, 4>(sdag, 4), q);
            rotated.apply_h(q);
            break;
        default:
            break;
        }
    }
    const std::uint64_t support = pauli.support_mask();
    double p_even = 0.0;
    const auto amps = rotated.amplitudes();
    for (std::uint64_t x = 0; x < amps.size(); ++x) {
        if ((std::popcount(x & support) & 1) == 0) {
            p_even += std::norm(amps[x]);
        }
    }
    // Per-shot parity outcomes are Bernoulli(p_even); their sum is binomial.
    const auto even = draw_binomial(shots, p_even, rng);
    return (2.0 * static_cast<double>(even) - static_cast<double>(shots)) /
           static_cast<double>(shots);
}

} // namespace

double estimate_cost(const ParameterizedCircuit &circuit, const ParameterVector &params,
                     const CostSpec &spec, std::uint64_t shots, Rng &rng, StepCounter &counter) {
    require(shots >= 1, ErrorCode::InvalidArgument, "shots must be >= 1");
    double total = 0.0;
    for (const auto &term : spec.terms()) {
        const StateVector out = run_circuit(circuit, params, term.input);
        double expectation = 0.0;
        for (const auto &p : term.observable.terms()) {
            expectation += p.coeff * sample_pauli(out, p.pauli, shots, rng);
        }
        total += term.weight * expectation;
    }
    counter.increment();
    return total;
}

double estimate_cost(const ParameterizedCircuit &circuit, const ParameterVector &params,
                     const FidelityCostSpec &spec, std::uint64_t shots, Rng &rng,
                     StepCounter &counter) {
    require(shots >= 1, ErrorCode::InvalidArgument, "shots must be >= 1");
    // Probability of all zeros after U^dag(theta*) U(theta) is the overlap
    // squared with the cached target state.
    const double p0 = -fidelity_cost_exact(circuit, params, spec);
    const auto zeros = draw_binomial(shots, p0, rng);
    counter.increment();
    return -static_cast<double>(zeros) / static_cast<double>(shots);
}

double exact_cost_counted(const ParameterizedCircuit &circuit, const ParameterVector &params,
                          const CostSpec &spec, StepCounter &counter) {
    const double v = cost_exact(circuit, params, spec);
    counter.increment();
    return v;
}

double exact_cost_counted(const ParameterizedCircuit &circuit, const ParameterVector &params,
                          const FidelityCostSpec &spec, StepCounter &counter) {
    const double v = fidelity_cost_exact(circuit, params, spec);
    counter.increment();
    return v;
}

} // namespace smoq
