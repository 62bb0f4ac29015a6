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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "smoq/benchmark.hpp"
#include "smoq/results_io.hpp"
#include "smoq/tasks.hpp"
#include "test_util.hpp"

namespace smoq {
namespace {

namespace fs = std::filesystem;
using testing::random_params;

fs::path scratch_dir(const std::string &name) {
    fs::path p = fs::temp_directory_path() / ("smoq_test_" + name + "_" +
                                              std::to_string(::testing::UnitTest::GetInstance()
                                                                 ->random_seed()));
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST(Ansatz, ParameterCountLaw) {
    for (std::size_t r = 1; r <= 6; ++r) {
        for (std::size_t d = 0; d <= 10; ++d) {
            auto c = build_ansatz({r, d});
            EXPECT_EQ(c.num_params(), 2 * r * (d + 1));
            EXPECT_TRUE(c.parameters_independent());
        }
    }
    EXPECT_EQ(build_ansatz({5, 9}).num_params(), 100u);
    EXPECT_EQ(build_ansatz({4, 4}).num_params(), 40u);
}

TEST(Ansatz, Layout) {
    auto single = build_ansatz({1, 0});
    ASSERT_EQ(single.gates().size(), 2u);
    EXPECT_EQ(single.gates()[0].kind, GateKind::RX);
    EXPECT_EQ(single.gates()[1].kind, GateKind::RZ);

    auto c = build_ansatz({3, 1});
    std::size_t cz = 0;
    for (const auto &g : c.gates()) {
        if (g.kind == GateKind::CZ) {
            ++cz;
            EXPECT_EQ(g.targets[1], g.targets[0] + 1);
        }
    }
    EXPECT_EQ(cz, 2u);
    // layers: RX RZ per qubit, CZ ladder, RX RZ per qubit
    EXPECT_EQ(c.gates().size(), 6u + 2u + 6u);
    EXPECT_EQ(c.gates()[6].kind, GateKind::CZ);
}

TEST(Task1, TargetAndRange) {
    auto ansatz = build_ansatz({2, 1});
    Rng a = make_rng(1, 0);
    Rng b = make_rng(2, 0);
    auto ta = make_task1(ansatz, a);
    auto tb = make_task1(ansatz, b);
    EXPECT_NE(ta.target_params(), tb.target_params());
    EXPECT_DOUBLE_EQ(fidelity_cost_exact(ansatz, ta.target_params(), ta), -1.0);
    Rng rng(3);
    for (int i = 0; i < 10; ++i) {
        const double v = fidelity_cost_exact(ansatz, random_params(ansatz.num_params(), rng), ta);
        EXPECT_GE(v, -1.0);
        EXPECT_LE(v, 0.0);
    }
}

TEST(Task2, IsingGroundTruth) {
    auto ansatz = build_ansatz({4, 4});
    auto task = make_task2(transverse_field_ising(4), ansatz);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense_matrix(task.hamiltonian));
    EXPECT_NEAR(task.truth.energy, es.eigenvalues()(0), 1e-10);
    EXPECT_EQ(task.spec.terms().size(), 1u);
    EXPECT_SMOQ_ERROR(make_task2(transverse_field_ising(3), ansatz), ErrorCode::DimensionMismatch);
}

TEST(Task2, FromFile) {
    auto dir = scratch_dir("task2");
    fs::create_directories(dir);
    {
        std::ofstream(dir / "z.json") << R"({"qubits": 1, "terms": [{"pauli": "Z", "coeff": 1}]})";
        std::ofstream(dir / "bad.json")
            << R"({"qubits": 1, "terms": [{"pauli": "Z", "coeff": [1]}]})";
    }
    auto task = make_task2((dir / "z.json").string(), build_ansatz({1, 0}));
    EXPECT_NEAR(task.truth.energy, -1.0, 1e-12);
    EXPECT_NEAR(std::norm(task.truth.state[1]), 1.0, 1e-12);
    EXPECT_SMOQ_ERROR(make_task2((dir / "bad.json").string(), build_ansatz({1, 0})),
                      ErrorCode::Parse);
    fs::remove_all(dir);
}

TEST(ParseNames, RoundTrip) {
    for (auto o : {OptimizerKind::Nft, OptimizerKind::NftMulti, OptimizerKind::NftShared,
                   OptimizerKind::Spsa, OptimizerKind::NelderMead,
                   OptimizerKind::GradientDescent}) {
        EXPECT_EQ(parse_optimizer(optimizer_name(o)), o);
    }
    EXPECT_EQ(parse_task("fidelity"), TaskKind::Fidelity);
    EXPECT_EQ(parse_task("vqe"), TaskKind::Vqe);
    EXPECT_SMOQ_ERROR(parse_task("lih"), ErrorCode::InvalidArgument);
    EXPECT_SMOQ_ERROR(parse_optimizer("bfgs"), ErrorCode::InvalidArgument);
}

BenchmarkSpec small_spec() {
    BenchmarkSpec s;
    s.ansatz = {2, 1};
    s.budget = 200;
    s.runs = 4;
    s.master_seed = 7;
    s.checkpoints = {50, 100, 200};
    s.shots = 256;
    s.threads = 2;
    return s;
}

TEST(Benchmark, SeedOnlyRun) {
    for (auto o : {"nft", "nft-multi", "nft-shared", "spsa", "nelder-mead", "gd"}) {
        auto s = small_spec();
        s.optimizer = parse_optimizer(o);
        s.runs = 1;
        s.budget = 1;
        s.checkpoints = {1};
        auto r = run_benchmark(s);
        ASSERT_EQ(r.runs.size(), 1u);
        const auto &e = r.runs[0].trace.entries();
        if (s.optimizer == OptimizerKind::Spsa || s.optimizer == OptimizerKind::GradientDescent) {
            // no estimation fits in one step
            EXPECT_TRUE(e.empty()) << o;
        } else {
            ASSERT_EQ(e.size(), 1u) << o;
            EXPECT_EQ(e[0].step, 1u) << o;
        }
        EXPECT_LE(r.runs[0].steps_used, 1u);
    }
}

TEST(Benchmark, DeterministicAcrossThreadCounts) {
    for (auto o : {"nft", "spsa", "nelder-mead", "gd", "nft-multi"}) {
        auto s = small_spec();
        s.optimizer = parse_optimizer(o);
        auto a = run_benchmark(s);
        s.threads = 1;
        auto b = run_benchmark(s);
        EXPECT_EQ(a.tables, b.tables) << o;
        EXPECT_EQ(manifest_json(s, a), manifest_json(s, b)) << o;
    }
}

TEST(Benchmark, TablesSortedAndInRange) {
    auto s = small_spec();
    auto r = run_benchmark(s);
    ASSERT_EQ(r.tables.size(), 3u);
    for (const auto &t : r.tables) {
        EXPECT_EQ(t.metric, "fidelity");
        EXPECT_EQ(t.values.size(), s.runs);
        EXPECT_TRUE(std::is_sorted(t.values.begin(), t.values.end()));
        for (double v : t.values) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0 + 1e-12);
        }
    }
    for (const auto &run : r.runs) {
        for (std::size_t k = 1; k < run.trace.entries().size(); ++k) {
            EXPECT_GT(run.trace.entries()[k].step, run.trace.entries()[k - 1].step);
        }
        EXPECT_EQ(run.trace.back().step, run.steps_used);
    }
}

TEST(Benchmark, VqeEnergyAboveGround) {
    auto s = small_spec();
    s.task = TaskKind::Vqe;
    s.shots.reset();
    s.ansatz = {3, 1};
    auto r = run_benchmark(s);
    ASSERT_TRUE(r.ground_energy.has_value());
    ASSERT_EQ(r.tables.size(), 6u);
    EXPECT_EQ(r.tables[0].metric, "energy_difference");
    EXPECT_EQ(r.tables[3].metric, "fidelity");
    for (const auto &run : r.runs) {
        for (double d : run.exact_metric) {
            EXPECT_GE(d, -1e-9);
        }
        for (double f : run.ground_fidelity) {
            EXPECT_GE(f, 0.0);
            EXPECT_LE(f, 1.0 + 1e-12);
        }
    }
}

TEST(Benchmark, Validation) {
    auto s = small_spec();
    s.checkpoints = {500};
    EXPECT_SMOQ_ERROR(run_benchmark(s), ErrorCode::InvalidArgument);
    s = small_spec();
    s.task = TaskKind::Vqe;
    s.hamiltonian = transverse_field_ising(3);
    EXPECT_SMOQ_ERROR(run_benchmark(s), ErrorCode::DimensionMismatch);
    s = small_spec();
    s.runs = 0;
    EXPECT_SMOQ_ERROR(run_benchmark(s), ErrorCode::InvalidArgument);
}

TEST(CdfTableTest, Median) {
    CdfTable odd{"fidelity", 1, {0.1, 0.2, 0.9}};
    EXPECT_DOUBLE_EQ(odd.median(), 0.2);
    CdfTable even{"fidelity", 1, {0.1, 0.2, 0.4, 0.9}};
    EXPECT_DOUBLE_EQ(even.median(), 0.3);
    CdfTable empty{"fidelity", 1, {}};
    EXPECT_SMOQ_ERROR((void)empty.median(), ErrorCode::Precondition);
}

TEST(EmitResults, FilesAndRoundTrip) {
    auto s = small_spec();
    auto r = run_benchmark(s);
    auto dir = scratch_dir("emit");
    emit_results(s, r, dir.string());
    EXPECT_TRUE(fs::exists(dir / "manifest.json"));
    std::size_t cdf_files = 0;
    for (const auto &entry : fs::directory_iterator(dir)) {
        cdf_files += entry.path().filename().string().rfind("cdf_", 0) == 0;
    }
    EXPECT_EQ(cdf_files, 3u);
    for (const auto &t : r.tables) {
        auto back = read_cdf_csv((dir / cdf_file_name(t, s.task)).string(), t.metric);
        EXPECT_EQ(back.values, t.values);
        EXPECT_EQ(back.checkpoint, t.checkpoint);
    }
    for (std::uint64_t k = 0; k < s.runs; ++k) {
        auto text = slurp(dir / "runs" / (std::to_string(k) + ".csv"));
        EXPECT_EQ(text.rfind("step,cost_estimate,exact_metric\n", 0), 0u);
    }
    auto doc = nlohmann::json::parse(slurp(dir / "manifest.json"));
    EXPECT_EQ(doc["config"]["runs"], s.runs);
    EXPECT_EQ(doc["config"]["master_seed"], s.master_seed);
    EXPECT_EQ(doc["runs"].size(), s.runs);

    // cumulative counts are 1..n in the file
    std::istringstream cdf(slurp(dir / "cdf_100.csv"));
    std::string line;
    std::getline(cdf, line);
    EXPECT_EQ(line, "metric,cumulative_count");
    std::uint64_t expect = 1;
    double prev = -INFINITY;
    while (std::getline(cdf, line)) {
        const auto comma = line.find(',');
        const double v = std::stod(line.substr(0, comma));
        EXPECT_GE(v, prev);
        prev = v;
        EXPECT_EQ(std::stoull(line.substr(comma + 1)), expect++);
    }
    fs::remove_all(dir);
}

TEST(EmitResults, ByteIdenticalReruns) {
    auto s = small_spec();
    s.task = TaskKind::Vqe;
    auto da = scratch_dir("bytes_a");
    auto db = scratch_dir("bytes_b");
    emit_results(s, run_benchmark(s), da.string());
    emit_results(s, run_benchmark(s), db.string());
    for (const auto &entry : fs::recursive_directory_iterator(da)) {
        if (entry.is_regular_file()) {
            const auto rel = fs::relative(entry.path(), da);
            EXPECT_EQ(slurp(entry.path()), slurp(db / rel)) << rel;
        }
    }
    auto text = slurp(da / "runs" / "0.csv");
    EXPECT_EQ(text.rfind("step,cost_estimate,exact_metric,ground_fidelity\n", 0), 0u);
    EXPECT_TRUE(fs::exists(da / "cdf_fidelity_200.csv"));
    fs::remove_all(da);
    fs::remove_all(db);
}

TEST(EmitResults, EmptyTablesManifestOnly) {
    auto s = small_spec();
    s.checkpoints.clear();
    auto r = run_benchmark(s);
    EXPECT_TRUE(r.tables.empty());
    auto dir = scratch_dir("empty");
    emit_results(s, r, dir.string());
    EXPECT_TRUE(fs::exists(dir / "manifest.json"));
    for (const auto &entry : fs::directory_iterator(dir)) {
        EXPECT_NE(entry.path().filename().string().rfind("cdf_", 0), 0u);
    }
    fs::remove_all(dir);
}

TEST(EmitResults, IoErrorCarriesPath) {
    auto s = small_spec();
    s.runs = 1;
    auto r = run_benchmark(s);
    try {
        emit_results(s, r, "/proc/smoq_cannot_write_here");
        ADD_FAILURE() << "expected an I/O error";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Io);
        EXPECT_NE(std::string(e.what()).find("/proc/smoq_cannot_write_here"), std::string::npos);
    }
    EXPECT_SMOQ_ERROR(read_cdf_csv("/nonexistent/cdf.csv", "fidelity"), ErrorCode::Io);
}

} // namespace
} // namespace smoq
