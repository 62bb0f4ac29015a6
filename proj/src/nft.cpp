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

#include "smoq/nft.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "smoq/angles.hpp"
#include "smoq/error.hpp"

namespace smoq {

NftOptimizer::NftOptimizer(CostFunction &cost, ParameterVector initial, NftConfig config)
    : cost_(cost), params_(std::move(initial)), config_(config), usage_(cost.usage_counts()),
      order_rng_(config.order_seed) {
    require(params_.size() == cost_.num_params(), ErrorCode::DimensionMismatch,
            "initial parameters have length " + std::to_string(params_.size()) + ", cost has " +
                std::to_string(cost_.num_params()));
    require(params_.size() >= 1, ErrorCode::InvalidArgument, "nothing to optimize");
    require(config_.reestimate_every >= 1, ErrorCode::InvalidArgument,
            "reestimate_every must be >= 1");
    if (config_.variant == NftVariant::Multi) {
        require(config_.subset_size >= 1 && config_.subset_size <= 3,
                ErrorCode::InvalidArgument, "subset size must be 1, 2 or 3");
        require(config_.subset_size <= params_.size(), ErrorCode::InvalidArgument,
                "subset size exceeds the number of parameters");
    }
    if (config_.variant != NftVariant::Shared) {
        std::vector<std::size_t> all(params_.size());
        std::iota(all.begin(), all.end(), std::size_t{0});
        require_independent(all);
    }
}

double NftOptimizer::flat_tolerance() const noexcept {
    if (config_.flat_tolerance) {
        return *config_.flat_tolerance;
    }
    return cost_.sampled() ? 0.0 : 1e-12;
}

void NftOptimizer::require_seeded() const {
    require(cached_.has_value(), ErrorCode::Precondition,
            "optimizer has no cached cost; call seed() first");
}

void NftOptimizer::require_independent(std::span<const std::size_t> indices) const {
    for (auto j : indices) {
        require(j < usage_.size(), ErrorCode::OutOfRange,
                "parameter index " + std::to_string(j) + " out of range");
        require(usage_[j] == 1, ErrorCode::Precondition,
                "parameter " + std::to_string(j) + " drives " + std::to_string(usage_[j]) +
                    " gates; use the shared-parameter variant");
    }
}

void NftOptimizer::seed() {
    cached_ = cost_.evaluate(params_);
    trace_.record(cost_.steps(), params_, *cached_,
                  config_.trace.record_exact ? cost_.exact(params_) : std::nullopt);
}

bool NftOptimizer::next_is_reestimation() const noexcept {
    return (updates_ + 1) % config_.reestimate_every == 0;
}

void NftOptimizer::finish_update(double model_minimum) {
    ++updates_;
    cached_ = model_minimum;
    if (updates_ % config_.reestimate_every == 0) {
        cached_ = cost_.evaluate(params_);
        ++reestimations_;
    }
    trace_.record(cost_.steps(), params_, *cached_,
                  config_.trace.record_exact ? cost_.exact(params_) : std::nullopt);
}

void NftOptimizer::single_step(std::size_t j) {
    require_seeded();
    const std::size_t idx[1] = {j};
    require_independent(idx);
    const double theta0 = params_[j];
    ParameterVector probe = params_;
    probe.set(j, theta0 + kPi / 2.0);
    const double z_plus = cost_.evaluate(probe);
    probe.set(j, theta0 - kPi / 2.0);
    const double z_minus = cost_.evaluate(probe);
    const SineModel model = fit_sine_three_points(theta0, *cached_, z_plus, z_minus);
    const SineMinimum best = sine_argmin(model, theta0, flat_tolerance());
    params_.set(j, best.theta);
    finish_update(best.value);
}

void NftOptimizer::multi_step(std::span<const std::size_t> subset) {
    require_seeded();
    require(!subset.empty() && subset.size() <= 3, ErrorCode::InvalidArgument,
            "subset size must be 1, 2 or 3");
    require_independent(subset);
    for (std::size_t a = 0; a < subset.size(); ++a) {
        for (std::size_t b = a + 1; b < subset.size(); ++b) {
            require(subset[a] != subset[b], ErrorCode::InvalidArgument,
                    "subset indices must be distinct");
        }
    }
    std::vector<double> centre(subset.size());
    for (std::size_t k = 0; k < subset.size(); ++k) {
        centre[k] = params_[subset[k]];
    }
    TrigGrid grid(centre);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto alpha = grid.alpha(i);
        if (i == 0) {
            grid.set(alpha, *cached_);
            continue;
        }
        const auto angles = grid.angles(alpha);
        ParameterVector probe = params_;
        for (std::size_t k = 0; k < subset.size(); ++k) {
            probe.set(subset[k], angles[k]);
        }
        grid.set(alpha, cost_.evaluate(probe));
    }
    const auto model =
        fit_trig_tensor(std::vector<std::size_t>(subset.begin(), subset.end()), grid);
    const auto best = minimize_trig_tensor(model, centre, flat_tolerance());
    for (std::size_t k = 0; k < subset.size(); ++k) {
        params_.set(subset[k], best.angles[k]);
    }
    finish_update(best.value);
}

void NftOptimizer::shared_step(std::size_t j) {
    require_seeded();
    require(j < usage_.size(), ErrorCode::OutOfRange,
            "parameter index " + std::to_string(j) + " out of range");
    const std::size_t order = usage_[j];
    const std::size_t nodes = 2 * order + 1;
    const double theta0 = params_[j];
    std::vector<double> values(nodes);
    values[0] = *cached_;
    ParameterVector probe = params_;
    for (std::size_t s = 1; s < nodes; ++s) {
        probe.set(j, theta0 + kTwoPi * static_cast<double>(s) / static_cast<double>(nodes));
        values[s] = cost_.evaluate(probe);
    }
    const FourierModel model = fit_fourier(order, theta0, values);
    const FourierMinimum best = minimize_fourier(model, theta0, flat_tolerance());
    params_.set(j, best.theta);
    finish_update(best.value);
}

std::vector<std::size_t> NftOptimizer::next_subset() {
    const std::size_t n = params_.size();
    const std::size_t m = config_.variant == NftVariant::Multi ? config_.subset_size : 1;
    std::vector<std::size_t> subset(m);
    if (config_.order == SweepOrder::Sequential) {
        for (std::size_t k = 0; k < m; ++k) {
            subset[k] = static_cast<std::size_t>((cursor_ + k) % n);
        }
    } else {
        // Partial Fisher-Yates for m distinct indices.
        std::vector<std::size_t> pool(n);
        std::iota(pool.begin(), pool.end(), std::size_t{0});
        for (std::size_t k = 0; k < m; ++k) {
            std::uniform_int_distribution<std::size_t> pick(k, n - 1);
            std::swap(pool[k], pool[pick(order_rng_)]);
            subset[k] = pool[k];
        }
    }
    return subset;
}

std::uint64_t NftOptimizer::next_update_cost() const {
    std::uint64_t base = 0;
    switch (config_.variant) {
    case NftVariant::Single:
        base = 2;
        break;
    case NftVariant::Multi: {
        std::uint64_t p = 1;
        for (std::size_t k = 0; k < config_.subset_size; ++k) {
            p *= 3;
        }
        base = p - 1;
        break;
    }
    case NftVariant::Shared: {
        // Random order picks the index lazily; budget for the widest one.
        const std::size_t j = static_cast<std::size_t>(cursor_ % params_.size());
        const std::size_t s = config_.order == SweepOrder::Sequential
                                  ? usage_[j]
                                  : *std::max_element(usage_.begin(), usage_.end());
        base = 2 * s;
        break;
    }
    }
    return base + (next_is_reestimation() ? 1 : 0);
}

void NftOptimizer::run() {
    if (!cached_) {
        if (config_.max_steps < cost_.steps() + 1) {
            return;
        }
        seed();
    }
    while (cost_.steps() + next_update_cost() <= config_.max_steps) {
        const auto subset = next_subset();
        switch (config_.variant) {
        case NftVariant::Single:
            single_step(subset[0]);
            break;
        case NftVariant::Multi:
            multi_step(subset);
            break;
        case NftVariant::Shared:
            shared_step(subset[0]);
            break;
        }
        cursor_ += subset.size();
    }
}

RunTrace nft_run(CostFunction &cost, const ParameterVector &initial, const NftConfig &config) {
    NftOptimizer opt(cost, initial, config);
    opt.run();
    return opt.take_trace();
}

} // namespace smoq
