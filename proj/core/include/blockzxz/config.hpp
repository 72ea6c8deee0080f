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
#include <string_view>

namespace bzxz {

/// How aggressively the recursive synthesis reduces the CNOT count.
enum class OptLevel {
    L0,  ///< recurse to one-qubit leaves, no optimizations
    L1,  ///< stop at two-qubit leaves and use the 3-CNOT circuit
    L2,  ///< L1 plus folding the two CZ gates into the central multiplexor
    L3,  ///< L2 plus diagonal migration between two-qubit leaves
};

constexpr int to_int(OptLevel level) { return static_cast<int>(level); }
OptLevel opt_level_from_int(int level);
std::string_view to_string(OptLevel level);

struct Tolerances {
    double unitarity = 1e-10;  ///< accepted deviation of U^dagger U from I
    double factor = 1e-10;     ///< reconstruction bound for SVD / polar / eig
    double node = 1e-8;        ///< per-node reconstruction bound during recursion
    double verify = 1e-8;      ///< end-to-end distance bound
};

struct SynthesisConfig {
    OptLevel level = OptLevel::L3;
    Tolerances tol{};
    /// Unset means "verify nodes when the input has at most 6 qubits".
    std::optional<bool> verify_each_node{};
    /// Largest register size for which the circuit is simulated.
    int simulation_cap = 10;
    std::optional<std::uint64_t> seed{};

    bool verify_nodes_for(int num_qubits) const {
        return verify_each_node.value_or(num_qubits <= 6);
    }
};

}  // namespace bzxz
