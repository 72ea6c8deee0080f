// Copyright 2026 The blockzxz Authors
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

#include "blockzxz/report.hpp"

#include <chrono>

#include <json.hpp>

#include "blockzxz/errors.hpp"
#include "blockzxz/optimizer.hpp"
#include "blockzxz/synthesis.hpp"

namespace bzxz {

SynthesisReport make_report(const ComplexMatrix& u, const Circuit& circuit,
                            const SynthesisConfig& cfg, double wall_time_ms) {
    SynthesisReport r;
    r.n = circuit.num_qubits();
    r.level = cfg.level;
    r.cnot_measured = cnot_count(circuit);
    r.cnot_expected = expected_count(r.n, cfg.level);
    r.one_qubit_gate_count = one_qubit_count(circuit);
    if (r.n <= cfg.simulation_cap) {
        r.reconstruction_distance =
            distance_up_to_phase(u, circuit_to_unitary(circuit, cfg.simulation_cap));
    }
    r.wall_time_ms = wall_time_ms;
    r.seed = cfg.seed;
    return r;
}

SynthesisRun synthesize_with_report(const ComplexMatrix& u, const SynthesisConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    Circuit c = synthesize(u, cfg);
    const auto stop = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    SynthesisReport r = make_report(u, c, cfg, ms);
    return {std::move(c), r};
}

std::string to_json(const SynthesisReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["level"] = to_int(r.level);
    j["cnots"] = r.cnot_measured;
    j["expected"] = r.cnot_expected;
    j["oneq"] = r.one_qubit_gate_count;
    j["distance"] = r.reconstruction_distance ? nlohmann::ordered_json(*r.reconstruction_distance)
                                              : nlohmann::ordered_json(nullptr);
    j["ms"] = r.wall_time_ms;
    j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
    return j.dump();
}

SynthesisReport report_from_json(std::string_view text) {
    try {
        const auto j = nlohmann::json::parse(text);
        SynthesisReport r;
        r.n = j.at("n").get<int>();
        r.level = opt_level_from_int(j.at("level").get<int>());
        r.cnot_measured = j.at("cnots").get<std::int64_t>();
        r.cnot_expected = j.at("expected").get<std::int64_t>();
        r.one_qubit_gate_count = j.at("oneq").get<std::int64_t>();
        if (!j.at("distance").is_null()) r.reconstruction_distance = j["distance"].get<double>();
        r.wall_time_ms = j.at("ms").get<double>();
        if (!j.at("seed").is_null()) r.seed = j["seed"].get<std::uint64_t>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError(std::string("report JSON: ") + e.what());
    }
}

}  // namespace bzxz
