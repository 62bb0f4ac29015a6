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

#include "smoq/smoq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "smoq/benchmark.hpp"
#include "smoq/circuit.hpp"
#include "smoq/error.hpp"
#include "smoq/nft.hpp"
#include "smoq/observable.hpp"
#include "smoq/results_io.hpp"
#include "smoq/tasks.hpp"

struct smoq_circuit {
    smoq::ParameterizedCircuit circuit;
};

struct smoq_observable {
    smoq::Observable observable;
};

struct smoq_bench {
    smoq::BenchmarkSpec spec;
    std::optional<smoq::BenchmarkResult> result;
};

namespace {

thread_local std::string last_error;

struct HandleError {
    const char *what;
};

smoq_status to_status(smoq::ErrorCode code) {
    switch (code) {
    case smoq::ErrorCode::InvalidArgument:
        return SMOQ_ERROR_INVALID_ARGUMENT;
    case smoq::ErrorCode::OutOfRange:
        return SMOQ_ERROR_OUT_OF_RANGE;
    case smoq::ErrorCode::DimensionMismatch:
        return SMOQ_ERROR_DIMENSION_MISMATCH;
    case smoq::ErrorCode::Precondition:
        return SMOQ_ERROR_PRECONDITION;
    case smoq::ErrorCode::Parse:
        return SMOQ_ERROR_PARSE;
    case smoq::ErrorCode::Io:
        return SMOQ_ERROR_IO;
    }
    return SMOQ_ERROR_UNKNOWN;
}

template <class F> smoq_status guarded(F &&body) {
    try {
        body();
        return SMOQ_OK;
    } catch (const HandleError &e) {
        last_error = e.what;
        return SMOQ_ERROR_INVALID_HANDLE;
    } catch (const smoq::Error &e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return SMOQ_ERROR_UNKNOWN;
    } catch (const std::exception &e) {
        last_error = e.what();
        return SMOQ_ERROR_UNKNOWN;
    } catch (...) {
        last_error = "unknown error";
        return SMOQ_ERROR_UNKNOWN;
    }
}

template <class T> T &deref(T *handle) {
    if (handle == nullptr) {
        throw HandleError{"null handle"};
    }
    return *handle;
}

template <class T> void check_out(T *out) {
    smoq::require(out != nullptr, smoq::ErrorCode::InvalidArgument, "null output pointer");
}

void check_string(const char *s, const char *name) {
    smoq::require(s != nullptr, smoq::ErrorCode::InvalidArgument,
                  std::string("null string argument '") + name + "'");
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

smoq::ParameterVector read_params(const smoq::ParameterizedCircuit &c, const double *params,
                                  size_t n) {
    smoq::require(n == c.num_params(), smoq::ErrorCode::DimensionMismatch,
                  "expected " + std::to_string(c.num_params()) + " parameters, got " +
                      std::to_string(n));
    smoq::require(params != nullptr || n == 0, smoq::ErrorCode::InvalidArgument,
                  "null parameter array");
    return smoq::ParameterVector(std::span<const double>(params, n));
}

const smoq::BenchmarkResult &result_of(const smoq_bench *b) {
    const auto &bench = deref(b);
    smoq::require(bench.result.has_value(), smoq::ErrorCode::Precondition,
                  "benchmark has not been run");
    return *bench.result;
}

const smoq::CdfTable &table_of(const smoq_bench *b, size_t i) {
    const auto &r = result_of(b);
    smoq::require(i < r.tables.size(), smoq::ErrorCode::OutOfRange, "table index out of range");
    return r.tables[i];
}

// Changing the configuration invalidates previous results.
smoq::BenchmarkSpec &spec_of(smoq_bench *b) {
    auto &bench = deref(b);
    bench.result.reset();
    return bench.spec;
}

} // namespace

extern "C" {

SMOQ_API const char *smoq_version(void) { return "0.1.0"; }

SMOQ_API const char *smoq_status_string(smoq_status status) {
    switch (status) {
    case SMOQ_OK:
        return "ok";
    case SMOQ_ERROR_INVALID_ARGUMENT:
        return "invalid argument";
    case SMOQ_ERROR_OUT_OF_RANGE:
        return "out of range";
    case SMOQ_ERROR_DIMENSION_MISMATCH:
        return "dimension mismatch";
    case SMOQ_ERROR_PRECONDITION:
        return "precondition violated";
    case SMOQ_ERROR_PARSE:
        return "parse error";
    case SMOQ_ERROR_IO:
        return "I/O error";
    case SMOQ_ERROR_INVALID_HANDLE:
        return "invalid handle";
    case SMOQ_ERROR_UNKNOWN:
        break;
    }
    return "unknown error";
}

SMOQ_API const char *smoq_last_error(void) { return last_error.c_str(); }

SMOQ_API void smoq_string_free(char *str) { std::free(str); }

// -- circuits -----------------------------------------------------------------

SMOQ_API smoq_status smoq_circuit_from_json(const char *json, smoq_circuit **out) {
    return guarded([&] {
        check_string(json, "json");
        check_out(out);
        *out = new smoq_circuit{smoq::circuit_from_json(json)};
    });
}

SMOQ_API smoq_status smoq_circuit_load(const char *path, smoq_circuit **out) {
    return guarded([&] {
        check_string(path, "path");
        check_out(out);
        *out = new smoq_circuit{smoq::load_circuit(path)};
    });
}

SMOQ_API smoq_status smoq_circuit_ansatz(size_t qubits, size_t depth, smoq_circuit **out) {
    return guarded([&] {
        check_out(out);
        *out = new smoq_circuit{smoq::build_ansatz({qubits, depth})};
    });
}

SMOQ_API smoq_status smoq_circuit_num_qubits(const smoq_circuit *circuit, size_t *out) {
    return guarded([&] {
        const auto &c = deref(circuit);
        check_out(out);
        *out = c.circuit.num_qubits();
    });
}

SMOQ_API smoq_status smoq_circuit_num_params(const smoq_circuit *circuit, size_t *out) {
    return guarded([&] {
        const auto &c = deref(circuit);
        check_out(out);
        *out = c.circuit.num_params();
    });
}

SMOQ_API smoq_status smoq_circuit_usage_count(const smoq_circuit *circuit, size_t index,
                                              size_t *out) {
    return guarded([&] {
        const auto &c = deref(circuit);
        check_out(out);
        smoq::require(index < c.circuit.num_params(), smoq::ErrorCode::OutOfRange,
                      "parameter index out of range");
        *out = c.circuit.usage_counts()[index];
    });
}

SMOQ_API smoq_status smoq_circuit_to_json(const smoq_circuit *circuit, char **out) {
    return guarded([&] {
        const auto &c = deref(circuit);
        check_out(out);
        *out = copy_string(smoq::circuit_to_json(c.circuit));
    });
}

SMOQ_API void smoq_circuit_destroy(smoq_circuit *circuit) { delete circuit; }

// -- observables --------------------------------------------------------------

SMOQ_API smoq_status smoq_observable_from_json(const char *json, smoq_observable **out) {
    return guarded([&] {
        check_string(json, "json");
        check_out(out);
        *out = new smoq_observable{smoq::observable_from_json(json)};
    });
}

SMOQ_API smoq_status smoq_observable_load(const char *path, smoq_observable **out) {
    return guarded([&] {
        check_string(path, "path");
        check_out(out);
        *out = new smoq_observable{smoq::load_observable(path)};
    });
}

SMOQ_API smoq_status smoq_observable_ising(size_t qubits, double field, smoq_observable **out) {
    return guarded([&] {
        check_out(out);
        *out = new smoq_observable{smoq::transverse_field_ising(qubits, field)};
    });
}

SMOQ_API smoq_status smoq_observable_num_qubits(const smoq_observable *obs, size_t *out) {
    return guarded([&] {
        const auto &o = deref(obs);
        check_out(out);
        *out = o.observable.num_qubits();
    });
}

SMOQ_API smoq_status smoq_observable_to_json(const smoq_observable *obs, char **out) {
    return guarded([&] {
        const auto &o = deref(obs);
        check_out(out);
        *out = copy_string(smoq::observable_to_json(o.observable));
    });
}

SMOQ_API smoq_status smoq_observable_ground_energy(const smoq_observable *obs, double *out) {
    return guarded([&] {
        const auto &o = deref(obs);
        check_out(out);
        *out = smoq::ground_truth(o.observable).energy;
    });
}

SMOQ_API void smoq_observable_destroy(smoq_observable *obs) { delete obs; }

SMOQ_API smoq_status smoq_expectation(const smoq_circuit *circuit, const smoq_observable *obs,
                                      const double *params, size_t num_params, double *out) {
    return guarded([&] {
        const auto &c = deref(circuit);
        const auto &o = deref(obs);
        check_out(out);
        const auto p = read_params(c.circuit, params, num_params);
        *out = smoq::cost_exact(c.circuit, p, smoq::CostSpec::single(o.observable));
    });
}

SMOQ_API smoq_status smoq_nft_minimize(const smoq_circuit *circuit, const smoq_observable *obs,
                                       double *params, size_t num_params, uint64_t shots,
                                       uint64_t seed, uint64_t budget, double *final_cost) {
    return guarded([&] {
        const auto &c = deref(circuit);
        const auto &o = deref(obs);
        const auto initial = read_params(c.circuit, params, num_params);
        std::optional<smoq::ShotConfig> shot_cfg;
        if (shots > 0) {
            shot_cfg = smoq::ShotConfig{shots, smoq::derive_seed(seed, 0)};
        }
        smoq::CircuitCost cost(c.circuit, smoq::CostSpec::single(o.observable), shot_cfg);
        smoq::NftConfig cfg;
        cfg.variant = c.circuit.parameters_independent() ? smoq::NftVariant::Single
                                                         : smoq::NftVariant::Shared;
        cfg.max_steps = budget;
        cfg.order_seed = smoq::derive_seed(seed, 1);
        smoq::NftOptimizer opt(cost, initial, cfg);
        opt.run();
        for (size_t i = 0; i < num_params; ++i) {
            params[i] = opt.params()[i];
        }
        if (final_cost != nullptr) {
            *final_cost = *cost.exact(opt.params());
        }
    });
}

// -- benchmark ----------------------------------------------------------------

SMOQ_API smoq_status smoq_bench_create(smoq_bench **out) {
    return guarded([&] {
        check_out(out);
        *out = new smoq_bench{};
    });
}

SMOQ_API void smoq_bench_destroy(smoq_bench *bench) { delete bench; }

SMOQ_API smoq_status smoq_bench_set_task(smoq_bench *bench, const char *task) {
    return guarded([&] {
        auto &spec = spec_of(bench);
        check_string(task, "task");
        spec.task = smoq::parse_task(task);
    });
}

SMOQ_API smoq_status smoq_bench_set_optimizer(smoq_bench *bench, const char *optimizer) {
    return guarded([&] {
        auto &spec = spec_of(bench);
        check_string(optimizer, "optimizer");
        spec.optimizer = smoq::parse_optimizer(optimizer);
    });
}

SMOQ_API smoq_status smoq_bench_set_ansatz(smoq_bench *bench, size_t qubits, size_t depth) {
    return guarded([&] {
        auto &spec = spec_of(bench);
        smoq::require(qubits >= 1 && qubits <= 20, smoq::ErrorCode::InvalidArgument,
                      "qubits must be in [1, 20]");
        spec.ansatz = {qubits, depth};
    });
}

SMOQ_API smoq_status smoq_bench_set_shots(smoq_bench *bench, uint64_t shots) {
    return guarded([&] {
        auto &spec = spec_of(bench);
        spec.shots = shots == 0 ? std::nullopt : std::optional<std::uint64_t>(shots);
    });
}

SMOQ_API smoq_status smoq_bench_set_budget(smoq_bench *bench, uint64_t steps) {
    return guarded([&] {
        auto &spec = spec_of(bench);
        smoq::require(steps >= 1, smoq::ErrorCode::InvalidArgument, "budget must be >= 1");
        spec.budget = steps;
    });
}

SMOQ_API smoq_status smoq_bench_set_runs(smoq_bench *bench, uint64_t runs) {
    return guarded([&] {
        auto &spec = spec_of(bench);
        smoq::require(runs >= 1, smoq::ErrorCode::InvalidArgument, "runs must be >= 1");
        spec.runs = runs;
    });
}

SMOQ_API smoq_status smoq_bench_set_seed(smoq_bench *bench, uint64_t seed) {
    return guarded([&] { spec_of(bench).master_seed = seed; });
}

SMOQ_API smoq_status smoq_bench_set_threads(smoq_bench *bench, unsigned threads) {
    return guarded([&] { spec_of(bench).threads = threads; });
}

SMOQ_API smoq_status smoq_bench_set_checkpoints(smoq_bench *bench, const uint64_t *steps,
                                                size_t count) {
    return guarded([&] {
        auto &spec = spec_of(bench);
        smoq::require(steps != nullptr || count == 0, smoq::ErrorCode::InvalidArgument,
                      "null checkpoint array");
        spec.checkpoints.assign(steps, steps + count);
    });
}

SMOQ_API smoq_status smoq_bench_set_hamiltonian(smoq_bench *bench, const smoq_observable *obs,
                                                const char *source) {
    return guarded([&] {
        auto &spec = spec_of(bench);
        const auto &o = deref(obs);
        spec.hamiltonian = o.observable;
        spec.hamiltonian_source = source != nullptr ? source : "api";
    });
}

SMOQ_API smoq_status smoq_bench_set_hamiltonian_file(smoq_bench *bench, const char *path) {
    return guarded([&] {
        auto &spec = spec_of(bench);
        check_string(path, "path");
        spec.hamiltonian = smoq::load_observable(path);
        spec.hamiltonian_source = path;
    });
}

SMOQ_API smoq_status smoq_bench_set_reestimate_every(smoq_bench *bench, uint64_t period) {
    return guarded([&] {
        auto &spec = spec_of(bench);
        smoq::require(period >= 1, smoq::ErrorCode::InvalidArgument,
                      "re-estimation period must be >= 1");
        spec.nft.reestimate_every = period;
    });
}

SMOQ_API smoq_status smoq_bench_set_subset_size(smoq_bench *bench, size_t size) {
    return guarded([&] {
        auto &spec = spec_of(bench);
        smoq::require(size >= 1 && size <= 3, smoq::ErrorCode::InvalidArgument,
                      "subset size must be 1, 2 or 3");
        spec.nft.subset_size = size;
    });
}

SMOQ_API smoq_status smoq_bench_set_random_order(smoq_bench *bench, int random) {
    return guarded([&] {
        spec_of(bench).nft.order =
            random != 0 ? smoq::SweepOrder::Random : smoq::SweepOrder::Sequential;
    });
}

SMOQ_API smoq_status smoq_bench_set_learning_rate(smoq_bench *bench, double rate) {
    return guarded([&] {
        auto &spec = spec_of(bench);
        smoq::require(rate >= 0.0, smoq::ErrorCode::InvalidArgument,
                      "learning rate must be non-negative");
        spec.gd_learning_rate = rate;
    });
}

SMOQ_API smoq_status smoq_bench_run(smoq_bench *bench) {
    return guarded([&] {
        auto &b = deref(bench);
        b.result.reset();
        b.result = smoq::run_benchmark(b.spec);
    });
}

SMOQ_API smoq_status smoq_bench_num_tables(const smoq_bench *bench, size_t *out) {
    return guarded([&] {
        check_out(out);
        *out = result_of(bench).tables.size();
    });
}

SMOQ_API smoq_status smoq_bench_table_info(const smoq_bench *bench, size_t table,
                                           const char **metric, uint64_t *checkpoint,
                                           size_t *count) {
    return guarded([&] {
        const auto &t = table_of(bench, table);
        if (metric != nullptr) {
            *metric = t.metric.c_str();
        }
        if (checkpoint != nullptr) {
            *checkpoint = t.checkpoint;
        }
        if (count != nullptr) {
            *count = t.values.size();
        }
    });
}

SMOQ_API smoq_status smoq_bench_table_values(const smoq_bench *bench, size_t table,
                                             double *values, size_t capacity) {
    return guarded([&] {
        const auto &t = table_of(bench, table);
        check_out(values);
        smoq::require(capacity >= t.values.size(), smoq::ErrorCode::OutOfRange,
                      "value buffer too small");
        std::copy(t.values.begin(), t.values.end(), values);
    });
}

SMOQ_API smoq_status smoq_bench_table_median(const smoq_bench *bench, size_t table,
                                             double *out) {
    return guarded([&] {
        check_out(out);
        *out = table_of(bench, table).median();
    });
}

SMOQ_API smoq_status smoq_bench_manifest_json(const smoq_bench *bench, char **out) {
    return guarded([&] {
        check_out(out);
        const auto &r = result_of(bench);
        *out = copy_string(smoq::manifest_json(bench->spec, r));
    });
}

SMOQ_API smoq_status smoq_bench_emit(const smoq_bench *bench, const char *out_dir) {
    return guarded([&] {
        check_string(out_dir, "out_dir");
        const auto &r = result_of(bench);
        smoq::emit_results(bench->spec, r, out_dir);
    });
}

} // extern "C"
