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
#include <map>
#include <random>
#include <string>

#include "smoq/circuit.hpp"
#include "smoq/observable.hpp"

namespace smoq {

/// Shots per cost estimation and the seed of the estimation stream.
struct ShotConfig {
    std::uint64_t shots = 1024;
    std::uint64_t rng_seed = 0;
};

/// Number of cost-function estimations performed so far.
class StepCounter {
  public:
    void increment() noexcept { ++steps_; }
    [[nodiscard]] std::uint64_t steps() const noexcept { return steps_; }

  private:
    std::uint64_t steps_ = 0;
};

using Rng = std::mt19937_64;

/// SplitMix64 finalizer over (master, stream): independent per-run seeds.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept;

inline Rng make_rng(std::uint64_t master, std::uint64_t stream) {
    return Rng(derive_seed(master, stream));
}

/// Bitstring label of a basis index; character q is qubit q.
std::string bitstring(std::uint64_t index, std::size_t num_qubits);

/// Draws `shots` computational-basis outcomes from |amplitude|^2.
std::map<std::string, std::uint64_t> sample_bitstrings(const StateVector &state,
                                                       std::uint64_t shots, Rng &rng);

/// Shot estimate of a Pauli-sum cost. Each Pauli string of each term is read
/// out with `shots` samples after rotating X -> Z with H and Y -> Z with S^dag
/// then H. The whole estimate counts as one step.
double estimate_cost(const ParameterizedCircuit &circuit, const ParameterVector &params,
                     const CostSpec &spec, std::uint64_t shots, Rng &rng, StepCounter &counter);

/// Shot estimate of the fidelity cost: -(#all-zeros outcomes)/shots.
double estimate_cost(const ParameterizedCircuit &circuit, const ParameterVector &params,
                     const FidelityCostSpec &spec, std::uint64_t shots, Rng &rng,
                     StepCounter &counter);

double exact_cost_counted(const ParameterizedCircuit &circuit, const ParameterVector &params,
                          const CostSpec &spec, StepCounter &counter);

double exact_cost_counted(const ParameterizedCircuit &circuit, const ParameterVector &params,
                          const FidelityCostSpec &spec, StepCounter &counter);

} // namespace smoq
