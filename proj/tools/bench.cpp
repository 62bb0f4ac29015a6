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

// bench: run an optimizer benchmark and write CDF tables.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "smoq/smoq.h"

namespace {

bool check(smoq_status status, const char *what) {
    if (status == SMOQ_OK) {
        return true;
    }
    std::fprintf(stderr, "bench: %s: %s (%s)\n", what, smoq_status_string(status),
                 smoq_last_error());
    return false;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Benchmark sequential minimal optimization against baselines"};

    std::string task = "fidelity";
    std::size_t qubits = 3;
    std::size_t depth = 3;
    std::string optimizer = "nft";
    std::uint64_t shots = 1024;
    bool exact = false;
    std::uint64_t budget = 8192;
    std::uint64_t runs = 100;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> checkpoints{1024, 2048, 4096, 8192};
    std::string hamiltonian;
    std::string out_dir;
    unsigned threads = 0;
    std::optional<std::uint64_t> reestimate;
    std::optional<std::size_t> subset;
    bool random_order = false;
    std::optional<double> learning_rate;

    app.add_option("--task", task, "fidelity (state learning) or vqe")
        ->check(CLI::IsMember({"fidelity", "vqe"}));
    app.add_option("--qubits", qubits, "number of qubits")->check(CLI::Range(1, 20));
    app.add_option("--depth", depth, "ansatz depth");
    app.add_option("--optimizer", optimizer, "nft, nft-multi, nft-shared, spsa, nelder-mead, gd")
        ->check(CLI::IsMember({"nft", "nft-multi", "nft-shared", "spsa", "nelder-mead", "gd"}));
    auto *shots_opt = app.add_option("--shots", shots, "shots per estimate");
    auto *exact_flag = app.add_flag("--exact", exact, "use exact expectation values");
    shots_opt->excludes(exact_flag);
    app.add_option("--budget", budget, "step budget per run");
    app.add_option("--runs", runs, "number of independent runs");
    app.add_option("--seed", seed, "master seed");
    app.add_option("--checkpoints", checkpoints, "comma separated step checkpoints")
        ->delimiter(',');
    app.add_option("--hamiltonian", hamiltonian, "Hamiltonian JSON file (vqe)")
        ->check(CLI::ExistingFile);
    app.add_option("--out", out_dir, "output directory")->required();
    app.add_option("--threads", threads, "worker threads (0 = hardware)");
    app.add_option("--reestimate-every", reestimate, "NFT re-estimation period");
    app.add_option("--subset-size", subset, "parameters per multi update")
        ->check(CLI::Range(1, 3));
    app.add_flag("--random-order", random_order, "random NFT sweep order");
    app.add_option("--learning-rate", learning_rate, "gradient descent learning rate");

    CLI11_PARSE(app, argc, argv);

    smoq_bench *bench = nullptr;
    if (!check(smoq_bench_create(&bench), "create")) {
        return 1;
    }
    bool ok = check(smoq_bench_set_task(bench, task.c_str()), "task") &&
              check(smoq_bench_set_ansatz(bench, qubits, depth), "ansatz") &&
              check(smoq_bench_set_optimizer(bench, optimizer.c_str()), "optimizer") &&
              check(smoq_bench_set_shots(bench, exact ? 0 : shots), "shots") &&
              check(smoq_bench_set_budget(bench, budget), "budget") &&
              check(smoq_bench_set_runs(bench, runs), "runs") &&
              check(smoq_bench_set_seed(bench, seed), "seed") &&
              check(smoq_bench_set_threads(bench, threads), "threads") &&
              check(smoq_bench_set_checkpoints(bench, checkpoints.data(), checkpoints.size()),
                    "checkpoints") &&
              check(smoq_bench_set_random_order(bench, random_order ? 1 : 0), "order");
    if (ok && !hamiltonian.empty()) {
        ok = check(smoq_bench_set_hamiltonian_file(bench, hamiltonian.c_str()), "hamiltonian");
    }
    if (ok && reestimate) {
        ok = check(smoq_bench_set_reestimate_every(bench, *reestimate), "reestimate-every");
    }
    if (ok && subset) {
        ok = check(smoq_bench_set_subset_size(bench, *subset), "subset-size");
    }
    if (ok && learning_rate) {
        ok = check(smoq_bench_set_learning_rate(bench, *learning_rate), "learning-rate");
    }
    ok = ok && check(smoq_bench_run(bench), "run") &&
         check(smoq_bench_emit(bench, out_dir.c_str()), "emit");

    std::size_t tables = 0;
    if (ok) {
        ok = check(smoq_bench_num_tables(bench, &tables), "tables");
    }
    for (std::size_t i = 0; ok && i < tables; ++i) {
        const char *metric = nullptr;
        std::uint64_t cp = 0;
        std::size_t count = 0;
        double median = 0.0;
        ok = check(smoq_bench_table_info(bench, i, &metric, &cp, &count), "table") &&
             check(smoq_bench_table_median(bench, i, &median), "median");
        if (ok) {
            std::printf("%-18s step %-7llu median %.6g (%zu runs)\n", metric,
                        static_cast<unsigned long long>(cp), median, count);
        }
    }
    smoq_bench_destroy(bench);
    return ok ? 0 : 1;
}
