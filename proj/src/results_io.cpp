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

#include "smoq/results_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "smoq/error.hpp"

namespace smoq {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_file(const fs::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        fail(ErrorCode::Io, "cannot open '" + path.string() + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        fail(ErrorCode::Io, "failed writing '" + path.string() + "'");
    }
}

json nft_json(const NftConfig &c) {
    json j;
    j["order"] = c.order == SweepOrder::Sequential ? "sequential" : "random";
    j["reestimate_every"] = c.reestimate_every;
    j["subset_size"] = c.subset_size;
    if (c.flat_tolerance) {
        j["flat_tolerance"] = *c.flat_tolerance;
    }
    return j;
}

} // namespace

std::string cdf_file_name(const CdfTable &table, TaskKind task) {
    if (table.metric == primary_metric(task)) {
        return "cdf_" + std::to_string(table.checkpoint) + ".csv";
    }
    return "cdf_" + table.metric + "_" + std::to_string(table.checkpoint) + ".csv";
}

std::string manifest_json(const BenchmarkSpec &spec, const BenchmarkResult &result) {
    json cfg;
    cfg["task"] = std::string(task_name(spec.task));
    cfg["qubits"] = spec.ansatz.qubits;
    cfg["depth"] = spec.ansatz.depth;
    cfg["num_params"] = spec.ansatz.num_params();
    cfg["optimizer"] = std::string(optimizer_name(spec.optimizer));
    cfg["shots"] = spec.shots ? json(*spec.shots) : json("exact");
    cfg["budget"] = spec.budget;
    cfg["runs"] = spec.runs;
    cfg["master_seed"] = spec.master_seed;
    cfg["checkpoints"] = spec.checkpoints;
    cfg["nft"] = nft_json(spec.nft);
    cfg["spsa"] = {{"a", spec.spsa.a},         {"c", spec.spsa.c},
                   {"alpha", spec.spsa.alpha}, {"gamma", spec.spsa.gamma},
                   {"A", spec.spsa.A},         {"iterations", spec.spsa.iterations}};
    cfg["nelder_mead"] = {{"reflection", spec.nelder_mead.reflection},
                          {"expansion", spec.nelder_mead.expansion},
                          {"contraction", spec.nelder_mead.contraction},
                          {"shrink", spec.nelder_mead.shrink},
                          {"initial_edge", spec.nelder_mead.initial_edge}};
    cfg["gd_learning_rate"] = spec.gd_learning_rate;
    if (spec.task == TaskKind::Vqe) {
        cfg["hamiltonian_source"] = spec.hamiltonian_source;
        const Observable h =
            spec.hamiltonian ? *spec.hamiltonian : transverse_field_ising(spec.ansatz.qubits);
        cfg["hamiltonian"] = json::parse(observable_to_json(h));
    }

    json doc;
    doc["config"] = std::move(cfg);
    if (result.target_params) {
        const auto v = result.target_params->values();
        doc["target_params"] = std::vector<double>(v.begin(), v.end());
    }
    if (result.ground_energy) {
        doc["ground_energy"] = *result.ground_energy;
    }
    json runs = json::array();
    for (const auto &r : result.runs) {
        runs.push_back({{"index", r.index},
                        {"seed", r.seed},
                        {"steps_used", r.steps_used},
                        {"file", "runs/" + std::to_string(r.index) + ".csv"}});
    }
    doc["runs"] = std::move(runs);
    json tables = json::array();
    for (const auto &t : result.tables) {
        tables.push_back({{"metric", t.metric},
                          {"checkpoint", t.checkpoint},
                          {"file", cdf_file_name(t, spec.task)},
                          {"median", t.values.empty() ? json(nullptr) : json(t.median())}});
    }
    doc["tables"] = std::move(tables);
    return doc.dump(2) + "\n";
}

std::vector<std::string> emit_results(const BenchmarkSpec &spec, const BenchmarkResult &result,
                                      const std::string &out_dir) {
    const fs::path root(out_dir);
    std::error_code ec;
    fs::create_directories(root, ec);
    if (ec) {
        fail(ErrorCode::Io, "cannot create directory '" + root.string() + "': " + ec.message());
    }
    std::vector<std::string> written;
    if (!result.runs.empty()) {
        fs::create_directories(root / "runs", ec);
        if (ec) {
            fail(ErrorCode::Io,
                 "cannot create directory '" + (root / "runs").string() + "': " + ec.message());
        }
    }
    const bool vqe = spec.task == TaskKind::Vqe;
    for (const auto &r : result.runs) {
        std::ostringstream csv;
        csv << "step,cost_estimate,exact_metric" << (vqe ? ",ground_fidelity" : "") << "\n";
        const auto &entries = r.trace.entries();
        for (std::size_t i = 0; i < entries.size(); ++i) {
            csv << entries[i].step << ',' << format_double(entries[i].cost_estimate) << ','
                << format_double(r.exact_metric[i]);
            if (vqe) {
                csv << ',' << format_double(r.ground_fidelity[i]);
            }
            csv << '\n';
        }
        const fs::path p = root / "runs" / (std::to_string(r.index) + ".csv");
        write_file(p, csv.str());
        written.push_back(p.string());
    }
    for (const auto &t : result.tables) {
        std::ostringstream csv;
        csv << "metric,cumulative_count\n";
        for (std::size_t i = 0; i < t.values.size(); ++i) {
            csv << format_double(t.values[i]) << ',' << (i + 1) << '\n';
        }
        const fs::path p = root / cdf_file_name(t, spec.task);
        write_file(p, csv.str());
        written.push_back(p.string());
    }
    const fs::path manifest = root / "manifest.json";
    write_file(manifest, manifest_json(spec, result));
    written.push_back(manifest.string());
    return written;
}

CdfTable read_cdf_csv(const std::string &path, const std::string &metric) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorCode::Io, "cannot open '" + path + "'");
    }
    std::string line;
    if (!std::getline(in, line) || line != "metric,cumulative_count") {
        fail(ErrorCode::Parse, "'" + path + "': missing CDF header");
    }
    CdfTable t;
    t.metric = metric;
    const auto stem = fs::path(path).stem().string();
    const auto us = stem.find_last_of('_');
    if (us != std::string::npos) {
        try {
            t.checkpoint = std::stoull(stem.substr(us + 1));
        } catch (const std::exception &) {
            fail(ErrorCode::Parse, "'" + path + "': cannot read checkpoint from file name");
        }
    }
    std::size_t expected = 1;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            fail(ErrorCode::Parse, "'" + path + "': malformed row '" + line + "'");
        }
        try {
            t.values.push_back(std::stod(line.substr(0, comma)));
            if (std::stoull(line.substr(comma + 1)) != expected) {
                fail(ErrorCode::Parse, "'" + path + "': cumulative count out of sequence");
            }
        } catch (const std::logic_error &) {
            fail(ErrorCode::Parse, "'" + path + "': malformed row '" + line + "'");
        }
        ++expected;
    }
    return t;
}

} // namespace smoq
