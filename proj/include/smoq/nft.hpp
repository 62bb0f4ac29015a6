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
#include <optional>
#include <span>
#include <vector>

#include "smoq/cost.hpp"
#include "smoq/sampling.hpp"
#include "smoq/trig_models.hpp"

namespace smoq {

enum class NftVariant {
    Single, ///< one parameter per update, nodes theta +/- pi/2
    Multi,  ///< |M| parameters per update on the 3^|M| grid
    Shared, ///< one parameter used S_j times, 2 S_j + 1 Fourier nodes
};

enum class SweepOrder { Sequential, Random };

struct NftConfig {
    NftVariant variant = NftVariant::Single;
    SweepOrder order = SweepOrder::Sequential;
    /// Every n-th update re-measures the cached cost instead of trusting the
    /// model minimum.
    std::uint64_t reestimate_every = 32;
    /// |M| for the multi-parameter variant, 1 to 3.
    std::size_t subset_size = 2;
    /// Total estimation budget, including the initial seeding estimation.
    std::uint64_t max_steps = 8192;
    /// Seed of the index stream for SweepOrder::Random.
    std::uint64_t order_seed = 0;
    /// Restrictions flatter than this keep their angle. Defaults to 1e-12 for
    /// exact costs and 0 (move unless exactly flat) for sampled costs.
    std::optional<double> flat_tolerance;
    TraceOptions trace;
};

/// Sequential minimal optimizer over a step-counted cost.
///
/// The optimizer keeps a cached estimate of the cost at the current
/// parameters. Each update measures the restriction at the non-centre nodes,
/// reuses the cache as the centre node, jumps to the model's global minimum
/// and replaces the cache with the model minimum.
class NftOptimizer {
  public:
    NftOptimizer(CostFunction &cost, ParameterVector initial, NftConfig config);

    /// Measures the cost at the initial parameters (1 step).
    void seed();

    /// theta_j +/- pi/2 update (2 steps, +1 on re-estimation updates).
    void single_step(std::size_t j);
    /// Joint update of `subset` (3^|M| - 1 steps, +1 on re-estimation updates).
    void multi_step(std::span<const std::size_t> subset);
    /// Fourier update of a parameter used S_j times (2 S_j steps, +1 on
    /// re-estimation updates).
    void shared_step(std::size_t j);

    /// Seeds if needed, then performs updates per the configured variant and
    /// order while the next full update fits in the budget.
    void run();

    /// Steps the next update of the configured variant would consume.
    [[nodiscard]] std::uint64_t next_update_cost() const;

    [[nodiscard]] const ParameterVector &params() const noexcept { return params_; }
    [[nodiscard]] std::optional<double> cached_cost() const noexcept { return cached_; }
    [[nodiscard]] std::uint64_t updates() const noexcept { return updates_; }
    [[nodiscard]] std::uint64_t reestimations() const noexcept { return reestimations_; }
    [[nodiscard]] const RunTrace &trace() const noexcept { return trace_; }
    [[nodiscard]] RunTrace take_trace() { return std::move(trace_); }
    [[nodiscard]] const CostFunction &cost() const noexcept { return cost_; }

  private:
    void require_seeded() const;
    void require_independent(std::span<const std::size_t> indices) const;
    void finish_update(double model_minimum);
    [[nodiscard]] bool next_is_reestimation() const noexcept;
    [[nodiscard]] std::vector<std::size_t> next_subset();
    [[nodiscard]] double flat_tolerance() const noexcept;

    CostFunction &cost_;
    ParameterVector params_;
    NftConfig config_;
    std::vector<std::size_t> usage_;
    std::optional<double> cached_;
    std::uint64_t updates_ = 0;
    std::uint64_t reestimations_ = 0;
    std::uint64_t cursor_ = 0;
    Rng order_rng_;
    RunTrace trace_;
};

/// Runs the optimizer to the step budget and returns its trace.
RunTrace nft_run(CostFunction &cost, const ParameterVector &initial, const NftConfig &config);

} // namespace smoq
