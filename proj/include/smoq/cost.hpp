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
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "smoq/circuit.hpp"
#include "smoq/observable.hpp"
#include "smoq/sampling.hpp"

namespace smoq {

/// Step-counted cost interface shared by every optimizer. Each call to
/// evaluate() is one estimation and advances the counter by exactly one.
class CostFunction {
  public:
    virtual ~CostFunction() = default;

    [[nodiscard]] virtual std::size_t num_params() const = 0;

    /// Rotation slots per parameter (S_j). All ones unless overridden.
    [[nodiscard]] virtual std::vector<std::size_t> usage_counts() const;

    /// True when evaluate() returns shot-noise estimates.
    [[nodiscard]] virtual bool sampled() const noexcept { return false; }

    virtual double evaluate(const ParameterVector &params) = 0;

    /// Uncounted noiseless value, when the backend can provide one.
    [[nodiscard]] virtual std::optional<double> exact(const ParameterVector &) const {
        return std::nullopt;
    }

    [[nodiscard]] std::uint64_t steps() const noexcept { return counter_.steps(); }

  protected:
    StepCounter counter_;
};

/// Cost of a circuit against a Pauli-sum or fidelity specification, either
/// exact (shots == nullopt) or shot-sampled.
class CircuitCost final : public CostFunction {
  public:
    using Spec = std::variant<CostSpec, FidelityCostSpec>;

    CircuitCost(ParameterizedCircuit circuit, Spec spec, std::optional<ShotConfig> shots);

    [[nodiscard]] std::size_t num_params() const override { return circuit_.num_params(); }
    [[nodiscard]] std::vector<std::size_t> usage_counts() const override {
        return circuit_.usage_counts();
    }
    [[nodiscard]] bool sampled() const noexcept override { return shots_.has_value(); }

    double evaluate(const ParameterVector &params) override;
    [[nodiscard]] std::optional<double> exact(const ParameterVector &params) const override;

    [[nodiscard]] const ParameterizedCircuit &circuit() const noexcept { return circuit_; }
    [[nodiscard]] const Spec &spec() const noexcept { return spec_; }

  private:
    ParameterizedCircuit circuit_;
    Spec spec_;
    std::optional<ShotConfig> shots_;
    Rng rng_;
};

/// Wraps a plain function of the parameter values; used for surrogate
/// landscapes in tests and examples.
class FunctionCost final : public CostFunction {
  public:
    using Fn = std::function<double(std::span<const double>)>;

    FunctionCost(std::size_t num_params, Fn fn, std::vector<std::size_t> usage = {});

    [[nodiscard]] std::size_t num_params() const override { return num_params_; }
    [[nodiscard]] std::vector<std::size_t> usage_counts() const override;

    double evaluate(const ParameterVector &params) override;
    [[nodiscard]] std::optional<double> exact(const ParameterVector &params) const override;

  private:
    std::size_t num_params_;
    Fn fn_;
    std::vector<std::size_t> usage_;
};

struct TraceEntry {
    std::uint64_t step = 0;
    ParameterVector params;
    double cost_estimate = 0.0;
    std::optional<double> exact_cost;
};

/// Per-update record of an optimizer run. Steps are strictly increasing.
class RunTrace {
  public:
    void record(std::uint64_t step, const ParameterVector &params, double cost_estimate,
                std::optional<double> exact_cost = std::nullopt);

    [[nodiscard]] const std::vector<TraceEntry> &entries() const noexcept { return entries_; }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
    [[nodiscard]] const TraceEntry &back() const { return entries_.back(); }

    /// Last entry whose step is <= `step`, if any.
    [[nodiscard]] const TraceEntry *at_step(std::uint64_t step) const;

    /// Frees the stored parameter vectors, keeping steps and costs.
    void drop_params();

  private:
    std::vector<TraceEntry> entries_;
};

/// Options shared by the optimizer front-ends.
struct TraceOptions {
    /// Also store the uncounted exact cost next to each estimate.
    bool record_exact = false;
};

} // namespace smoq
