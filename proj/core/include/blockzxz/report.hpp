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
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "blockzxz/circuit.hpp"
#include "blockzxz/config.hpp"

namespace bzxz {

struct SynthesisReport {
    int n = 0;
    OptLevel level = OptLevel::L3;
    std::int64_t cnot_measured = 0;
    std::int64_t cnot_expected = 0;
    std::int64_t one_qubit_gate_count = 0;
    /// Absent when n exceeds the simulation cap.
    std::optional<double> reconstruction_distance;
    double wall_time_ms = 0.0;
    std::optional<std::uint64_t> seed;

    friend bool operator==(const SynthesisReport&, const SynthesisReport&) = default;
};

SynthesisReport make_report(const ComplexMatrix& u, const Circuit& circuit,
                            const SynthesisConfig& cfg, double wall_time_ms = 0.0);

struct SynthesisRun {
    Circuit circuit;
    SynthesisReport report;
};

/// synthesize() timed and reported.
SynthesisRun synthesize_with_report(const ComplexMatrix& u, const SynthesisConfig& cfg = {});

/// Single-line JSON: {"n", "level", "cnots", "expected", "oneq", "distance", "ms", "seed"}.
std::string to_json(const SynthesisReport& r);
SynthesisReport report_from_json(std::string_view text);

}  // namespace bzxz
