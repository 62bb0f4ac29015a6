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

#include "smoq/cost.hpp"

namespace smoq {

/// Gains a_k = a / (k + 1 + A)^alpha and c_k = c / (k + 1)^gamma.
struct SpsaConfig {
    double a = 0.628;
    double c = 0.1;
    double alpha = 0.602;
    double gamma = 0.101;
    double A = 0.0;
    /// Iteration cap; 0 means "until the budget is spent".
    std::uint64_t iterations = 0;
    /// Seed of the Rademacher perturbation stream.
    std::uint64_t seed = 0;
    TraceOptions trace;
};

/// Simultaneous-perturbation stochastic approximation. Each iteration costs
/// two estimations; the recorded estimate is the mean of the two.
RunTrace spsa_run(CostFunction &cost, const ParameterVector &initial, const SpsaConfig &config,
                  std::uint64_t budget);

struct NelderMeadConfig {
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
    /// Length of the axis-aligned initial simplex edges, in radians.
    double initial_edge = 0.5;
    TraceOptions trace;
};

/// Downhill simplex over the parameters treated as unconstrained reals.
/// Records the best vertex after every iteration.
RunTrace nelder_mead_run(CostFunction &cost, const ParameterVector &initial,
                         const NelderMeadConfig &config, std::uint64_t budget);

/// [L(theta_j + pi/2) - L(theta_j - pi/2)] / 2. Two steps. Parameters shared
/// by several gates are rejected.
double param_shift_gradient(CostFunction &cost, const ParameterVector &params, std::size_t j);

/// Full shift-rule gradient descent, 2J steps per iteration. There is no
/// direct estimate at the iterate, so trace estimates are NaN.
RunTrace gradient_descent_run(CostFunction &cost, const ParameterVector &initial,
                              double learning_rate, std::uint64_t budget,
                              const TraceOptions &trace = {});

} // namespace smoq
