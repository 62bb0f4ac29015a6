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

#include "smoq/cost.hpp"

#include <algorithm>

#include "smoq/error.hpp"

namespace smoq {

std::vector<std::size_t> CostFunction::usage_counts() const {
    return std::vector<std::size_t>(num_params(), 1);
}

CircuitCost::CircuitCost(ParameterizedCircuit circuit, Spec spec, std::optional<ShotConfig> shots)
    : circuit_(std::move(circuit)), spec_(std::move(spec)), shots_(shots),
      rng_(shots ? shots->rng_seed : 0) {
    const std::size_t r =
        std::visit([](const auto &s) { return s.num_qubits(); }, spec_);
    require(r == circuit_.num_qubits(), ErrorCode::DimensionMismatch,
            "cost terms and circuit disagree on the qubit count");
    if (shots_) {
        require(shots_->shots >= 1, ErrorCode::InvalidArgument, "shots must be >= 1");
    }
}

double CircuitCost::evaluate(const ParameterVector &params) {
    return std::visit(
        [&](const auto &s) {
            if (shots_) {
                return estimate_cost(circuit_, params, s, shots_->shots, rng_, counter_);
            }
            return exact_cost_counted(circuit_, params, s, counter_);
        },
        spec_);
}

std::optional<double> CircuitCost::exact(const ParameterVector &params) const {
    return std::visit(
        [&](const auto &s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CostSpec>) {
                return cost_exact(circuit_, params, s);
            } else {
                return fidelity_cost_exact(circuit_, params, s);
            }
        },
        spec_);
}

FunctionCost::FunctionCost(std::size_t num_params, Fn fn, std::vector<std::size_t> usage)
    : num_params_(num_params), fn_(std::move(fn)), usage_(std::move(usage)) {
    require(static_cast<bool>(fn_), ErrorCode::InvalidArgument, "empty cost function");
    if (usage_.empty()) {
        usage_.assign(num_params_, 1);
    }
    require(usage_.size() == num_params_, ErrorCode::DimensionMismatch,
            "usage count list has the wrong length");
}

std::vector<std::size_t> FunctionCost::usage_counts() const { return usage_; }

double FunctionCost::evaluate(const ParameterVector &params) {
    require(params.size() == num_params_, ErrorCode::DimensionMismatch,
            "parameter count mismatch");
    counter_.increment();
    return fn_(params.values());
}

std::optional<double> FunctionCost::exact(const ParameterVector &params) const {
    return fn_(params.values());
}

void RunTrace::record(std::uint64_t step, const ParameterVector &params, double cost_estimate,
                      std::optional<double> exact_cost) {
    require(entries_.empty() || step > entries_.back().step, ErrorCode::Precondition,
            "trace steps must be strictly increasing");
    entries_.push_back({step, params, cost_estimate, exact_cost});
}

const TraceEntry *RunTrace::at_step(std::uint64_t step) const {
    auto it = std::upper_bound(entries_.begin(), entries_.end(), step,
                               [](std::uint64_t s, const TraceEntry &e) { return s < e.step; });
    if (it == entries_.begin()) {
        return nullptr;
    }
    return &*std::prev(it);
}

void RunTrace::drop_params() {
    for (auto &e : entries_) {
        e.params = ParameterVector{};
    }
}

} // namespace smoq
