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

// Exercises the shared library through its C header only.
#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "smoq/smoq.h"

namespace {

TEST(CApi, VersionAndStatusStrings) {
    EXPECT_STREQ(smoq_version(), "0.1.0");
    EXPECT_STREQ(smoq_status_string(SMOQ_OK), "ok");
    EXPECT_STREQ(smoq_status_string(SMOQ_ERROR_PARSE), "parse error");
}

TEST(CApi, CircuitLifecycle) {
    smoq_circuit *c = nullptr;
    ASSERT_EQ(smoq_circuit_ansatz(3, 3, &c), SMOQ_OK);
    size_t n = 0;
    ASSERT_EQ(smoq_circuit_num_params(c, &n), SMOQ_OK);
    EXPECT_EQ(n, 24u);
    ASSERT_EQ(smoq_circuit_num_qubits(c, &n), SMOQ_OK);
    EXPECT_EQ(n, 3u);
    ASSERT_EQ(smoq_circuit_usage_count(c, 0, &n), SMOQ_OK);
    EXPECT_EQ(n, 1u);
    EXPECT_EQ(smoq_circuit_usage_count(c, 24, &n), SMOQ_ERROR_OUT_OF_RANGE);

    char *json = nullptr;
    ASSERT_EQ(smoq_circuit_to_json(c, &json), SMOQ_OK);
    smoq_circuit *again = nullptr;
    ASSERT_EQ(smoq_circuit_from_json(json, &again), SMOQ_OK);
    smoq_string_free(json);
    ASSERT_EQ(smoq_circuit_num_params(again, &n), SMOQ_OK);
    EXPECT_EQ(n, 24u);
    smoq_circuit_destroy(again);
    smoq_circuit_destroy(c);
}

TEST(CApi, ErrorsAndLastMessage) {
    smoq_circuit *c = nullptr;
    EXPECT_EQ(smoq_circuit_from_json("{", &c), SMOQ_ERROR_PARSE);
    EXPECT_EQ(c, nullptr);
    EXPECT_NE(std::strlen(smoq_last_error()), 0u);
    EXPECT_EQ(smoq_circuit_from_json(nullptr, &c), SMOQ_ERROR_INVALID_ARGUMENT);
    EXPECT_EQ(smoq_circuit_load("/nonexistent.json", &c), SMOQ_ERROR_IO);
    size_t n = 0;
    EXPECT_EQ(smoq_circuit_num_params(nullptr, &n), SMOQ_ERROR_INVALID_HANDLE);
    EXPECT_EQ(smoq_circuit_ansatz(0, 1, &c), SMOQ_ERROR_INVALID_ARGUMENT);
    smoq_circuit_destroy(nullptr);
    smoq_observable_destroy(nullptr);
    smoq_bench_destroy(nullptr);
}

TEST(CApi, ExpectationAndGroundEnergy) {
    smoq_circuit *c = nullptr;
    ASSERT_EQ(smoq_circuit_from_json(
                  R"({"qubits": 1, "gates": [{"type": "rx", "targets": [0], "param": 0}]})", &c),
              SMOQ_OK);
    smoq_observable *z = nullptr;
    ASSERT_EQ(smoq_observable_from_json(R"({"qubits": 1, "terms": [{"pauli": "Z", "coeff": 1}]})",
                                        &z),
              SMOQ_OK);
    double theta = 1.1;
    double e = 0.0;
    ASSERT_EQ(smoq_expectation(c, z, &theta, 1, &e), SMOQ_OK);
    EXPECT_NEAR(e, std::cos(1.1), 1e-15);
    double two[2] = {0.0, 0.0};
    EXPECT_EQ(smoq_expectation(c, z, two, 2, &e), SMOQ_ERROR_DIMENSION_MISMATCH);
    ASSERT_EQ(smoq_observable_ground_energy(z, &e), SMOQ_OK);
    EXPECT_NEAR(e, -1.0, 1e-12);

    double final_cost = 0.0;
    ASSERT_EQ(smoq_nft_minimize(c, z, &theta, 1, 0, 1, 3, &final_cost), SMOQ_OK);
    EXPECT_NEAR(final_cost, -1.0, 1e-9);
    smoq_observable_destroy(z);
    smoq_circuit_destroy(c);
}

TEST(CApi, NftMinimizeOnIsing) {
    smoq_circuit *c = nullptr;
    ASSERT_EQ(smoq_circuit_ansatz(3, 2, &c), SMOQ_OK);
    smoq_observable *h = nullptr;
    ASSERT_EQ(smoq_observable_ising(3, 1.0, &h), SMOQ_OK);
    double ground = 0.0;
    ASSERT_EQ(smoq_observable_ground_energy(h, &ground), SMOQ_OK);
    std::vector<double> p(18, 0.3);
    double start = 0.0;
    ASSERT_EQ(smoq_expectation(c, h, p.data(), p.size(), &start), SMOQ_OK);
    double final_cost = 0.0;
    ASSERT_EQ(smoq_nft_minimize(c, h, p.data(), p.size(), 1024, 5, 2000, &final_cost), SMOQ_OK);
    EXPECT_LT(final_cost, start);
    EXPECT_GE(final_cost, ground - 1e-9);
    double check = 0.0;
    ASSERT_EQ(smoq_expectation(c, h, p.data(), p.size(), &check), SMOQ_OK);
    EXPECT_NEAR(check, final_cost, 1e-12);
    smoq_observable_destroy(h);
    smoq_circuit_destroy(c);
}

TEST(CApi, BenchEndToEnd) {
    smoq_bench *b = nullptr;
    ASSERT_EQ(smoq_bench_create(&b), SMOQ_OK);
    ASSERT_EQ(smoq_bench_set_task(b, "vqe"), SMOQ_OK);
    EXPECT_EQ(smoq_bench_set_task(b, "nope"), SMOQ_ERROR_INVALID_ARGUMENT);
    ASSERT_EQ(smoq_bench_set_optimizer(b, "nft"), SMOQ_OK);
    ASSERT_EQ(smoq_bench_set_ansatz(b, 2, 1), SMOQ_OK);
    ASSERT_EQ(smoq_bench_set_shots(b, 0), SMOQ_OK);
    ASSERT_EQ(smoq_bench_set_budget(b, 100), SMOQ_OK);
    ASSERT_EQ(smoq_bench_set_runs(b, 3), SMOQ_OK);
    ASSERT_EQ(smoq_bench_set_seed(b, 11), SMOQ_OK);
    const uint64_t cps[2] = {50, 100};
    ASSERT_EQ(smoq_bench_set_checkpoints(b, cps, 2), SMOQ_OK);

    size_t tables = 0;
    EXPECT_EQ(smoq_bench_num_tables(b, &tables), SMOQ_ERROR_PRECONDITION);
    ASSERT_EQ(smoq_bench_run(b), SMOQ_OK) << smoq_last_error();
    ASSERT_EQ(smoq_bench_num_tables(b, &tables), SMOQ_OK);
    ASSERT_EQ(tables, 4u);
    const char *metric = nullptr;
    uint64_t cp = 0;
    size_t count = 0;
    ASSERT_EQ(smoq_bench_table_info(b, 0, &metric, &cp, &count), SMOQ_OK);
    EXPECT_STREQ(metric, "energy_difference");
    EXPECT_EQ(cp, 50u);
    EXPECT_EQ(count, 3u);
    std::vector<double> values(count);
    EXPECT_EQ(smoq_bench_table_values(b, 0, values.data(), 1), SMOQ_ERROR_OUT_OF_RANGE);
    ASSERT_EQ(smoq_bench_table_values(b, 0, values.data(), values.size()), SMOQ_OK);
    double median = 0.0;
    ASSERT_EQ(smoq_bench_table_median(b, 0, &median), SMOQ_OK);
    EXPECT_DOUBLE_EQ(median, values[1]);
    EXPECT_EQ(smoq_bench_table_info(b, 9, &metric, &cp, &count), SMOQ_ERROR_OUT_OF_RANGE);

    char *manifest = nullptr;
    ASSERT_EQ(smoq_bench_manifest_json(b, &manifest), SMOQ_OK);
    EXPECT_NE(std::string(manifest).find("\"master_seed\": 11"), std::string::npos);
    smoq_string_free(manifest);

    const auto dir = std::filesystem::temp_directory_path() / "smoq_capi_emit";
    std::filesystem::remove_all(dir);
    ASSERT_EQ(smoq_bench_emit(b, dir.string().c_str()), SMOQ_OK);
    EXPECT_TRUE(std::filesystem::exists(dir / "manifest.json"));
    EXPECT_TRUE(std::filesystem::exists(dir / "cdf_50.csv"));
    EXPECT_TRUE(std::filesystem::exists(dir / "cdf_fidelity_100.csv"));
    std::filesystem::remove_all(dir);

    // reconfiguring drops the stale result
    ASSERT_EQ(smoq_bench_set_runs(b, 2), SMOQ_OK);
    EXPECT_EQ(smoq_bench_num_tables(b, &tables), SMOQ_ERROR_PRECONDITION);
    ASSERT_EQ(smoq_bench_set_checkpoints(b, nullptr, 0), SMOQ_OK);
    smoq_observable *h = nullptr;
    ASSERT_EQ(smoq_observable_ising(3, 1.0, &h), SMOQ_OK);
    ASSERT_EQ(smoq_bench_set_hamiltonian(b, h, "test"), SMOQ_OK);
    EXPECT_EQ(smoq_bench_run(b), SMOQ_ERROR_DIMENSION_MISMATCH);
    smoq_observable_destroy(h);
    EXPECT_EQ(smoq_bench_set_subset_size(b, 4), SMOQ_ERROR_INVALID_ARGUMENT);
    EXPECT_EQ(smoq_bench_set_learning_rate(b, -1.0), SMOQ_ERROR_INVALID_ARGUMENT);
    EXPECT_EQ(smoq_bench_set_task(nullptr, "vqe"), SMOQ_ERROR_INVALID_HANDLE);
    smoq_bench_destroy(b);
}

} // namespace
