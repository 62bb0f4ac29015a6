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
#include <string>
#include <string_view>
#include <vector>

#include "smoq/baselines.hpp"
#include "smoq/nft.hpp"
#include "smoq/observable.hpp"
#include "smoq/tasks.hpp"

namespace smoq {

enum class TaskKind { Fidelity, Vqe };

enum class OptimizerKind { Nft, NftMulti, NftShared, Spsa, NelderMead, GradientDescent };

std::string_view task_name(TaskKind t) noexcept;
std::string_view optimizer_name(OptimizerKind o) noexcept;
TaskKind parse_task(std::string_view name);
OptimizerKind parse_optimizer(std::string_view name);

struct BenchmarkSpec {
    TaskKind task = TaskKind::Fidelity;
    AnsatzSpec ansatz{3, 3};
    OptimizerKind optimizer = OptimizerKind::Nft;
    /// Shots per estimation; nullopt evaluates the cost exactly.
    std::optional<std::uint64_t> shots = 1024;
    std::uint64_t budget = 8192;
    std::uint64_t runs = 100;
    std::uint64_t master_seed = 0;
    std::vector<std::uint64_t> checkpoints{1024, 2048, 4096, 8192};
    /// VQE Hamiltonian; the transverse-field Ising chain when unset.
    std::optional<Observable> hamiltonian;
    /// Where the Hamiltonian came from, echoed into the manifest.
    std::string hamiltonian_source = "builtin:tfim";

    NftConfig nft;
    SpsaConfig spsa;
    NelderMeadConfig nelder_mead;
    double gd_learning_rate = 0.1;

    /// Worker threads; 0 uses the hardware concurrency. Output does not
    /// depend on this value.
    unsigned threads = 0;
    /// Keep per-step parameter vectors in the returned traces.
    bool keep_params = false;

    void validate() const;
};

struct RunRecord {
    std::uint64_t index = 0;
    std::uint64_t seed = 0;
    ParameterVector initial;
    RunTrace trace;
    /// Exact metric at every trace entry: fidelity (task 1) or energy minus the
    /// ground energy (VQE).
    std::vector<double> exact_metric;
    /// VQE only: overlap with the exact ground state at every trace entry.
    std::vector<double> ground_fidelity;
    /// Metric at each checkpoint, same order as BenchmarkSpec::checkpoints.
    std::vector<double> checkpoint_metric;
    std::vector<double> checkpoint_fidelity;
    std::uint64_t steps_used = 0;
};

/// Metric values of every run at one checkpoint, sorted ascending.
struct CdfTable {
    std::string metric;
    std::uint64_t checkpoint = 0;
    std::vector<double> values;

    [[nodiscard]] double median() const;
    bool operator==(const CdfTable &) const = default;
};

struct BenchmarkResult {
    std::vector<RunRecord> runs;
    std::vector<CdfTable> tables;
    /// theta* of the fidelity task (shared by all runs).
    std::optional<ParameterVector> target_params;
    std::optional<double> ground_energy;
};

BenchmarkResult run_benchmark(const BenchmarkSpec &spec);

/// Metric name for the primary table of a task.
std::string_view primary_metric(TaskKind task) noexcept;

} // namespace smoq
