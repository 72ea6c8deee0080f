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

#include <vector>

#include "blockzxz/circuit.hpp"

namespace bzxz {

/// Uniformly controlled Rz on a target qubit with the k qubits directly
/// below it as controls. Its matrix is D (+) D^dagger, D_j = e^{-i alpha_j/2}.
struct UcrzSpec {
    int target = 0;
    std::vector<double> alphas;  ///< 2^k entries

    int num_controls() const;
};

/// Control positions for the 2^k CNOTs, 1 = most significant control.
struct GraySchedule {
    int k = 0;
    std::vector<int> controls;
};

enum class UcrzVariant { Standard, Reversed };

/// Which CNOT of the Gray cycle to keep.
///   DropLast  (Standard only): circuit matrix = CNOT_term * (D (+) D^dagger)
///   DropFirst (Reversed only): circuit matrix = (D (+) D^dagger) * CNOT_term
/// CNOT_term has the first control as control and the target as target.
enum class TerminalCnot { Keep, DropLast, DropFirst };

std::vector<double> alphas_from_diagonal(const ComplexVector& d, double unitarity_tol = 1e-10);

GraySchedule gray_schedule(int k);

/// M_ij = (-1)^{popcount(i & gray(j))}, 0-based.
Eigen::MatrixXi mk_matrix(int k);

/// theta = 2^-k M^T alpha.
std::vector<double> solve_thetas(const std::vector<double>& alphas);

/// Emits Rz/CNOT gates on a register of target + k + 1 qubits.
Circuit synthesize_ucrz(const UcrzSpec& spec, UcrzVariant variant, TerminalCnot terminal);

/// Appends the same gates into an existing circuit.
void append_ucrz(Circuit& out, const UcrzSpec& spec, UcrzVariant variant, TerminalCnot terminal);

}  // namespace bzxz
