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

#include "smoq/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "smoq/error.hpp"

namespace smoq {

std::string_view task_name(TaskKind t) noexcept {
    return t == TaskKind::Fidelity ? "fidelity" : "vqe";
}

std::string_view optimizer_name(OptimizerKind o) noexcept {
    switch (o) {
    case OptimizerKind::Nft:
        return "nft";
    case OptimizerKind::NftMulti:
        return "nft-multi";
    case OptimizerKind::NftShared:
        return "nft-shared";
    case OptimizerKind::Spsa:
        return "spsa";
    case OptimizerKind::NelderMead:
        return "nelder-mead";
    case OptimizerKind::GradientDescent:
        return "gd";
    }
    return "?";
}

TaskKind parse_task(std::string_view name) {
    if (name == "fidelity") {
        return TaskKind::Fidelity;
    }
    if (name == "vqe") {
        return TaskKind::Vqe;
    }
    fail(ErrorCode::InvalidArgument, "unknown task '" + std::string(name) + "'");
}

OptimizerKind parse_optimizer(std::string_view name) {
    for (auto o : {OptimizerKind::Nft, OptimizerKind::NftMulti, OptimizerKind::NftShared,
                   OptimizerKind::Spsa, OptimizerKind::NelderMead,
                   OptimizerKind::GradientDescent}) {
        if (name == optimizer_name(o)) {
            return o;
        }
    }
    fail(ErrorCode::InvalidArgument, "unknown optimizer '" + std::string(name) + "'");
}

std::string_view primary_metric(TaskKind task) noexcept {
    return task == TaskKind::Fidelity ? "fidelity" : "energy_difference";
}

void BenchmarkSpec::validate() const {
    require(ansatz.qubits >= 1, ErrorCode::InvalidArgument, "ansatz needs at least one qubit");
    require(runs >= 1, ErrorCode::InvalidArgument, "need at least one run");
    require(budget >= 1, ErrorCode::InvalidArgument, "step budget must be >= 1");
    require(!shots || *shots >= 1, ErrorCode::InvalidArgument, "shots must be >= 1");
    for (auto c : checkpoints) {
        require(c <= budget, ErrorCode::InvalidArgument,
                "checkpoint " + std::to_string(c) + " exceeds the step budget");
    }
    if (hamiltonian) {
        require(hamiltonian->num_qubits() == ansatz.qubits, ErrorCode::DimensionMismatch,
                "Hamiltonian and ansatz disagree on the qubit count");
    }
    require(gd_learning_rate >= 0.0, ErrorCode::InvalidArgument,
            "learning rate must be non-negative");
}

double CdfTable::median() const {
    require(!values.empty(), ErrorCode::Precondition, "median of an empty table");
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

namespace {

struct Task {
    CircuitCost::Spec spec;
    std::optional<GroundTruth> truth;
};

RunTrace run_optimizer(const BenchmarkSpec &spec, CostFunction &cost,
                       const ParameterVector &initial, std::uint64_t optimizer_seed) {
    switch (spec.optimizer) {
    case OptimizerKind::Nft:
    case OptimizerKind::NftMulti:
    case OptimizerKind::NftShared: {
        NftConfig cfg = spec.nft;
        cfg.variant = spec.optimizer == OptimizerKind::Nft        ? NftVariant::Single
                      : spec.optimizer == OptimizerKind::NftMulti ? NftVariant::Multi
                                                                  : NftVariant::Shared;
        cfg.max_steps = spec.budget;
        cfg.order_seed = optimizer_seed;
        return nft_run(cost, initial, cfg);
    }
    case OptimizerKind::Spsa: {
        SpsaConfig cfg = spec.spsa;
        cfg.seed = optimizer_seed;
        if (spec.budget < 2) {
            return {};
        }
        return spsa_run(cost, initial, cfg, spec.budget);
    }
    case OptimizerKind::NelderMead:
        return nelder_mead_run(cost, initial, spec.nelder_mead, spec.budget);
    case OptimizerKind::GradientDescent:
        return gradient_descent_run(cost, initial, spec.gd_learning_rate, spec.budget);
    }
    return {};
}

RunRecord execute_run(const BenchmarkSpec &spec, const ParameterizedCircuit &circuit,
                      const Task &task, std::uint64_t index) {
    RunRecord rec;
    rec.index = index;
    rec.seed = derive_seed(spec.master_seed, index + 1);
    Rng init_rng(derive_seed(rec.seed, 1));
    rec.initial = random_angles(circuit.num_params(), init_rng);

    std::optional<ShotConfig> shots;
    if (spec.shots) {
        shots = ShotConfig{*spec.shots, derive_seed(rec.seed, 2)};
    }
    CircuitCost cost(circuit, task.spec, shots);
    rec.trace = run_optimizer(spec, cost, rec.initial, derive_seed(rec.seed, 3));
    rec.steps_used = cost.steps();

    auto metric = [&](const ParameterVector &p, double &primary, double &ground) {
        if (spec.task == TaskKind::Fidelity) {
            primary = -*cost.exact(p);
            ground = primary;
        } else {
            const StateVector psi = run_circuit(circuit, p);
            primary = *cost.exact(p) - task.truth->energy;
            ground = fidelity(task.truth->state, psi);
        }
    };

    const auto &entries = rec.trace.entries();
    rec.exact_metric.resize(entries.size());
    if (spec.task == TaskKind::Vqe) {
        rec.ground_fidelity.resize(entries.size());
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        double primary = 0.0;
        double ground = 0.0;
        metric(entries[i].params, primary, ground);
        rec.exact_metric[i] = primary;
        if (spec.task == TaskKind::Vqe) {
            rec.ground_fidelity[i] = ground;
        }
    }
    for (auto cp : spec.checkpoints) {
        const TraceEntry *e = rec.trace.at_step(cp);
        double primary = 0.0;
        double ground = 0.0;
        metric(e ? e->params : rec.initial, primary, ground);
        rec.checkpoint_metric.push_back(primary);
        if (spec.task == TaskKind::Vqe) {
            rec.checkpoint_fidelity.push_back(ground);
        }
    }
    if (!spec.keep_params) {
        rec.trace.drop_params();
    }
    return rec;
}

} // namespace

BenchmarkResult run_benchmark(const BenchmarkSpec &spec) {
    spec.validate();
    const ParameterizedCircuit circuit = build_ansatz(spec.ansatz);
    BenchmarkResult result;

    std::optional<Task> task;
    if (spec.task == TaskKind::Fidelity) {
        Rng target_rng(derive_seed(spec.master_seed, 0));
        FidelityCostSpec fid = make_task1(circuit, target_rng);
        result.target_params = fid.target_params();
        task = Task{std::move(fid), std::nullopt};
    } else {
        const Observable h =
            spec.hamiltonian ? *spec.hamiltonian : transverse_field_ising(spec.ansatz.qubits);
        VqeTask vqe = make_task2(h, circuit);
        result.ground_energy = vqe.truth.energy;
        task = Task{std::move(vqe.spec), std::move(vqe.truth)};
    }

    result.runs.resize(spec.runs);
    std::vector<std::exception_ptr> errors(spec.runs);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t k = next++; k < spec.runs; k = next++) {
            try {
                result.runs[k] = execute_run(spec, circuit, *task, k);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    unsigned threads = spec.threads != 0 ? spec.threads : std::thread::hardware_concurrency();
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(spec.runs)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    for (std::size_t c = 0; c < spec.checkpoints.size(); ++c) {
        CdfTable t{std::string(primary_metric(spec.task)), spec.checkpoints[c], {}};
        for (const auto &r : result.runs) {
            t.values.push_back(r.checkpoint_metric[c]);
        }
        std::sort(t.values.begin(), t.values.end());
        result.tables.push_back(std::move(t));
    }
    if (spec.task == TaskKind::Vqe) {
        for (std::size_t c = 0; c < spec.checkpoints.size(); ++c) {
            CdfTable t{"fidelity", spec.checkpoints[c], {}};
            for (const auto &r : result.runs) {
                t.values.push_back(r.checkpoint_fidelity[c]);
            }
            std::sort(t.values.begin(), t.values.end());
            result.tables.push_back(std::move(t));
        }
    }
    return result;
}

} // namespace smoq
