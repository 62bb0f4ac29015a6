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

#include "smoq/error.hpp"
#include "smoq/observable.hpp"

namespace smoq {

using nlohmann::json;

Observable observable_from_json(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        fail(ErrorCode::Parse, std::string("Hamiltonian JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("qubits") || !doc["qubits"].is_number_unsigned()) {
        fail(ErrorCode::Parse, "Hamiltonian JSON: missing non-negative integer 'qubits'");
    }
    if (!doc.contains("terms") || !doc["terms"].is_array()) {
        fail(ErrorCode::Parse, "Hamiltonian JSON: missing array 'terms'");
    }
    const auto r = doc["qubits"].get<std::size_t>();
    std::vector<PauliTerm> terms;
    std::size_t i = 0;
    for (const auto &t : doc["terms"]) {
        const std::string where = "Hamiltonian JSON term " + std::to_string(i++) + ": ";
        if (!t.is_object() || !t.contains("pauli") || !t["pauli"].is_string()) {
            fail(ErrorCode::Parse, where + "missing string field 'pauli'");
        }
        if (!t.contains("coeff") || !t["coeff"].is_number()) {
            fail(ErrorCode::Parse, where + "'coeff' must be a number");
        }
        const auto label = t["pauli"].get<std::string>();
        if (label.size() != r) {
            fail(ErrorCode::Parse, where + "label '" + label + "' does not have " +
                                       std::to_string(r) + " characters");
        }
        try {
            terms.push_back({t["coeff"].get<double>(), PauliString(label)});
        } catch (const Error &e) {
            fail(ErrorCode::Parse, where + e.what());
        }
    }
    if (terms.empty()) {
        fail(ErrorCode::Parse, "Hamiltonian JSON: no terms");
    }
    return Observable(r, std::move(terms));
}

std::string observable_to_json(const Observable &obs) {
    json terms = json::array();
    for (const auto &t : obs.terms()) {
        terms.push_back({{"pauli", t.pauli.label()}, {"coeff", t.coeff}});
    }
    json doc;
    doc["qubits"] = obs.num_qubits();
    doc["terms"] = std::move(terms);
    return doc.dump();
}

Observable load_observable(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorCode::Io, "cannot open Hamiltonian file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return observable_from_json(buf.str());
}

} // namespace smoq
