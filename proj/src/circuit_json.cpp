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

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "smoq/circuit.hpp"
#include "smoq/error.hpp"

namespace smoq {

using nlohmann::json;

namespace {

GateKind kind_from_name(const std::string &name) {
    static const std::pair<const char *, GateKind> table[] = {
        {"h", GateKind::H},   {"x", GateKind::X},   {"cz", GateKind::CZ},
        {"cnot", GateKind::CNOT}, {"rx", GateKind::RX}, {"ry", GateKind::RY},
        {"rz", GateKind::RZ}, {"unitary", GateKind::Unitary},
    };
    for (const auto &[n, k] : table) {
        if (name == n) {
            return k;
        }
    }
    fail(ErrorCode::Parse, "unknown gate type '" + name + "'");
}

Gate gate_from_json(const json &j, std::size_t index) {
    const std::string where = "gate " + std::to_string(index) + ": ";
    if (!j.is_object()) {
        fail(ErrorCode::Parse, where + "expected an object");
    }
    if (!j.contains("type") || !j["type"].is_string()) {
        fail(ErrorCode::Parse, where + "missing string field 'type'");
    }
    if (!j.contains("targets") || !j["targets"].is_array()) {
        fail(ErrorCode::Parse, where + "missing array field 'targets'");
    }
    Gate g;
    g.kind = kind_from_name(j["type"].get<std::string>());
    for (const auto &t : j["targets"]) {
        if (!t.is_number_unsigned()) {
            fail(ErrorCode::Parse, where + "targets must be non-negative integers");
        }
        g.targets.push_back(t.get<std::size_t>());
    }
    if (j.contains("param") && !j["param"].is_null()) {
        if (!j["param"].is_number_unsigned()) {
            fail(ErrorCode::Parse, where + "'param' must be a non-negative integer or null");
        }
        g.param = j["param"].get<std::size_t>();
    }
    if (g.is_rotation() && !g.param) {
        fail(ErrorCode::Parse, where + "rotation gate needs a 'param' index");
    }
    if (!g.is_rotation() && g.param) {
        fail(ErrorCode::Parse, where + "fixed gate must have 'param': null");
    }
    if (g.kind == GateKind::Unitary) {
        if (!j.contains("matrix") || !j["matrix"].is_array()) {
            fail(ErrorCode::Parse, where + "unitary gate needs a 'matrix' of [re, im] pairs");
        }
        std::vector<Complex> m;
        for (const auto &e : j["matrix"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                fail(ErrorCode::Parse, where + "matrix entries must be [re, im] pairs");
            }
            m.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
        return Gate::unitary(g.targets, std::move(m));
    }
    return g;
}

} // namespace

ParameterizedCircuit circuit_from_json(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        fail(ErrorCode::Parse, std::string("circuit JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("qubits") || !doc["qubits"].is_number_unsigned()) {
        fail(ErrorCode::Parse, "circuit JSON: missing non-negative integer 'qubits'");
    }
    if (!doc.contains("gates") || !doc["gates"].is_array()) {
        fail(ErrorCode::Parse, "circuit JSON: missing array 'gates'");
    }
    std::vector<Gate> gates;
    std::size_t i = 0;
    for (const auto &g : doc["gates"]) {
        gates.push_back(gate_from_json(g, i++));
    }
    return ParameterizedCircuit(doc["qubits"].get<std::size_t>(), std::move(gates));
}

std::string circuit_to_json(const ParameterizedCircuit &circuit) {
    json gates = json::array();
    for (const auto &g : circuit.gates()) {
        json jg;
        jg["type"] = std::string(gate_name(g.kind));
        jg["targets"] = g.targets;
        jg["param"] = g.param ? json(*g.param) : json(nullptr);
        if (g.kind == GateKind::Unitary) {
            json m = json::array();
            for (const auto &z : g.matrix) {
                m.push_back({z.real(), z.imag()});
            }
            jg["matrix"] = std::move(m);
        }
        gates.push_back(std::move(jg));
    }
    json doc;
    doc["qubits"] = circuit.num_qubits();
    doc["gates"] = std::move(gates);
    return doc.dump();
}

ParameterizedCircuit load_circuit(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorCode::Io, "cannot open circuit file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return circuit_from_json(buf.str());
}

} // namespace smoq
