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

#include "blockzxz/circuit.hpp"
#include "blockzxz/config.hpp"

namespace bzxz {

/// The two blocks of the central multiplexor after the CZ pair is folded in:
///   first  = W_A V_C
///   second = (Z (x) I) W_A B V_C (Z (x) I)
struct CentralMerge {
    ComplexMatrix first;
    ComplexMatrix second;
};

CentralMerge merge_central(const ComplexMatrix& v_c, const ComplexMatrix& w_a,
                           const ComplexMatrix& b);

/// One recursion step on an m-qubit unitary (m >= 2). The fragment acts on
/// qubits 0..m-1; its four children are Generic1Q / GenericBlock gates on
/// qubits 1..m-1 and everything else is elementary.
///   basic:  three full multiplexed Rz gates, 3 * 2^(m-1) CNOTs
///   merged: the outer two multiplexed Rz lose their CZ-facing CNOT and the
///           central block absorbs the CZ pair, 3 * 2^(m-1) - 2 CNOTs (m >= 3)
Circuit assemble_node_basic(const ComplexMatrix& u, const Tolerances& tol = {});
Circuit assemble_node_merged(const ComplexMatrix& u, const Tolerances& tol = {});

/// True when g commutes with every diagonal acting on the bottom two qubits
/// of an n-qubit register.
bool commutes_with_low_diagonal(const Gate& g, int num_qubits);

/// Lowers Generic1Q with ZYZ and two-qubit GenericBlock leaves with the
/// three-CNOT circuit.
Circuit lower_leaves(const Circuit& ir, const Tolerances& tol = {});

/// Lowers an IR circuit whose two-qubit leaves all sit on the bottom two
/// qubits. Leaves are visited from the last in time to the first; each one
/// is synthesized up to a diagonal that is pushed into the preceding leaf,
/// and the first leaf takes the full three-CNOT circuit.
Circuit migrate_diagonals(const Circuit& ir, const Tolerances& tol = {});

/// Structural CNOT count of synthesize() at the given level (n >= 1, n <= 28).
std::int64_t expected_count(int n, OptLevel level);

/// ceil((4^n - 3n - 1) / 4), the known lower bound for generic n-qubit unitaries.
std::int64_t lower_bound_count(int n);

}  // namespace bzxz
