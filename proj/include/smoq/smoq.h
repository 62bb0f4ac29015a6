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

/* C interface to smoq: circuits, Hamiltonians, the sequential minimal
 * optimizer and the benchmark harness behind opaque handles.
 *
 * Every function returns a smoq_status. On failure a message describing the
 * error is available from smoq_last_error() until the next failing call on
 * the same thread. Handles are owned by the caller and released with the
 * matching *_destroy function; destroying NULL is a no-op. Strings returned
 * through char** are released with smoq_string_free. */
#ifndef SMOQ_SMOQ_H
#define SMOQ_SMOQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(SMOQ_BUILDING_LIBRARY)
#define SMOQ_API __attribute__((visibility("default")))
#else
#define SMOQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum smoq_status {
    SMOQ_OK = 0,
    SMOQ_ERROR_INVALID_ARGUMENT = 1,
    SMOQ_ERROR_OUT_OF_RANGE = 2,
    SMOQ_ERROR_DIMENSION_MISMATCH = 3,
    SMOQ_ERROR_PRECONDITION = 4,
    SMOQ_ERROR_PARSE = 5,
    SMOQ_ERROR_IO = 6,
    SMOQ_ERROR_INVALID_HANDLE = 7,
    SMOQ_ERROR_UNKNOWN = 99
} smoq_status;

typedef struct smoq_circuit smoq_circuit;
typedef struct smoq_observable smoq_observable;
typedef struct smoq_bench smoq_bench;

SMOQ_API const char *smoq_version(void);
SMOQ_API const char *smoq_status_string(smoq_status status);
SMOQ_API const char *smoq_last_error(void);
SMOQ_API void smoq_string_free(char *str);

/* Circuits. JSON format:
 *   {"qubits": r, "gates": [{"type": "rx", "targets": [0], "param": 0}, ...]}
 * with types h, x, cz, cnot, rx, ry, rz and 0-based parameter indices. */
SMOQ_API smoq_status smoq_circuit_from_json(const char *json, smoq_circuit **out);
SMOQ_API smoq_status smoq_circuit_load(const char *path, smoq_circuit **out);
/* RX/RZ/CZ hardware-efficient ansatz with 2 * qubits * (depth + 1) parameters. */
SMOQ_API smoq_status smoq_circuit_ansatz(size_t qubits, size_t depth, smoq_circuit **out);
SMOQ_API smoq_status smoq_circuit_num_qubits(const smoq_circuit *circuit, size_t *out);
SMOQ_API smoq_status smoq_circuit_num_params(const smoq_circuit *circuit, size_t *out);
/* Number of rotation gates bound to parameter `index`. */
SMOQ_API smoq_status smoq_circuit_usage_count(const smoq_circuit *circuit, size_t index,
                                              size_t *out);
SMOQ_API smoq_status smoq_circuit_to_json(const smoq_circuit *circuit, char **out);
SMOQ_API void smoq_circuit_destroy(smoq_circuit *circuit);

/* Pauli-sum observables. JSON format:
 *   {"qubits": r, "terms": [{"pauli": "XZIY", "coeff": -0.4}, ...]}
 * Character k of a Pauli label acts on qubit k. */
SMOQ_API smoq_status smoq_observable_from_json(const char *json, smoq_observable **out);
SMOQ_API smoq_status smoq_observable_load(const char *path, smoq_observable **out);
/* -sum Z_i Z_{i+1} - field * sum X_i on an open chain. */
SMOQ_API smoq_status smoq_observable_ising(size_t qubits, double field, smoq_observable **out);
SMOQ_API smoq_status smoq_observable_num_qubits(const smoq_observable *obs, size_t *out);
SMOQ_API smoq_status smoq_observable_to_json(const smoq_observable *obs, char **out);
/* Lowest eigenvalue by dense diagonalization (at most 12 qubits). */
SMOQ_API smoq_status smoq_observable_ground_energy(const smoq_observable *obs, double *out);
SMOQ_API void smoq_observable_destroy(smoq_observable *obs);

/* <0| U(params)^dag H U(params) |0>. */
SMOQ_API smoq_status smoq_expectation(const smoq_circuit *circuit, const smoq_observable *obs,
                                      const double *params, size_t num_params, double *out);

/* Minimizes <H> over `params` (updated in place) with the sequential minimal
 * optimizer. shots == 0 evaluates exactly. Circuits whose parameters are
 * shared by several gates use the Fourier update automatically.
 * `final_cost` receives the exact cost at the returned parameters. */
SMOQ_API smoq_status smoq_nft_minimize(const smoq_circuit *circuit, const smoq_observable *obs,
                                       double *params, size_t num_params, uint64_t shots,
                                       uint64_t seed, uint64_t budget, double *final_cost);

/* Benchmark harness. Defaults: task "fidelity", 3 qubits, depth 3,
 * optimizer "nft", 1024 shots, budget 8192, 100 runs, seed 0,
 * checkpoints 1024,2048,4096,8192. */
SMOQ_API smoq_status smoq_bench_create(smoq_bench **out);
SMOQ_API void smoq_bench_destroy(smoq_bench *bench);
/* "fidelity" or "vqe". */
SMOQ_API smoq_status smoq_bench_set_task(smoq_bench *bench, const char *task);
/* "nft", "nft-multi", "nft-shared", "spsa", "nelder-mead" or "gd". */
SMOQ_API smoq_status smoq_bench_set_optimizer(smoq_bench *bench, const char *optimizer);
SMOQ_API smoq_status smoq_bench_set_ansatz(smoq_bench *bench, size_t qubits, size_t depth);
/* 0 selects exact evaluation. */
SMOQ_API smoq_status smoq_bench_set_shots(smoq_bench *bench, uint64_t shots);
SMOQ_API smoq_status smoq_bench_set_budget(smoq_bench *bench, uint64_t steps);
SMOQ_API smoq_status smoq_bench_set_runs(smoq_bench *bench, uint64_t runs);
SMOQ_API smoq_status smoq_bench_set_seed(smoq_bench *bench, uint64_t seed);
SMOQ_API smoq_status smoq_bench_set_threads(smoq_bench *bench, unsigned threads);
SMOQ_API smoq_status smoq_bench_set_checkpoints(smoq_bench *bench, const uint64_t *steps,
                                                size_t count);
SMOQ_API smoq_status smoq_bench_set_hamiltonian(smoq_bench *bench, const smoq_observable *obs,
                                                const char *source);
SMOQ_API smoq_status smoq_bench_set_hamiltonian_file(smoq_bench *bench, const char *path);
SMOQ_API smoq_status smoq_bench_set_reestimate_every(smoq_bench *bench, uint64_t period);
SMOQ_API smoq_status smoq_bench_set_subset_size(smoq_bench *bench, size_t size);
SMOQ_API smoq_status smoq_bench_set_random_order(smoq_bench *bench, int random);
SMOQ_API smoq_status smoq_bench_set_learning_rate(smoq_bench *bench, double rate);

SMOQ_API smoq_status smoq_bench_run(smoq_bench *bench);
/* Result tables; valid after smoq_bench_run. `metric` points into the handle. */
SMOQ_API smoq_status smoq_bench_num_tables(const smoq_bench *bench, size_t *out);
SMOQ_API smoq_status smoq_bench_table_info(const smoq_bench *bench, size_t table,
                                           const char **metric, uint64_t *checkpoint,
                                           size_t *count);
SMOQ_API smoq_status smoq_bench_table_values(const smoq_bench *bench, size_t table,
                                             double *values, size_t capacity);
SMOQ_API smoq_status smoq_bench_table_median(const smoq_bench *bench, size_t table,
                                             double *out);
SMOQ_API smoq_status smoq_bench_manifest_json(const smoq_bench *bench, char **out);
/* Writes runs/<k>.csv, cdf_*.csv and manifest.json under `out_dir`. */
SMOQ_API smoq_status smoq_bench_emit(const smoq_bench *bench, const char *out_dir);

#ifdef __cplusplus
}
#endif

#endif /* SMOQ_SMOQ_H */
