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

#include <optional>

#include "blockzxz/circuit.hpp"

namespace bzxz {

/// u = e^{i phi} Rz(alpha) Ry(beta) Rz(gamma), beta in [0, pi].
struct ZYZAngles {
    double phi = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

ZYZAngles zyz(const ComplexMatrix& u);

/// Appends Rz(gamma), Ry(beta), Rz(alpha) on qubit q and folds e^{i phi}
/// into the circuit phase.
void append_one_qubit(Circuit& out, int q, const ComplexMatrix& u);

/// Canonical form u = phase * (a1 (x) b1) * can(a, b, c) * (a2 (x) b2),
/// can(a, b, c) = exp(i (a XX + b YY + c ZZ)), all local factors in SU(2).
struct KakDecomposition {
    ComplexMatrix a1, b1, a2, b2;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    cplx phase{1.0, 0.0};
};

KakDecomposition kak_decompose(const ComplexMatrix& u);

ComplexMatrix canonical_gate(double a, double b, double c);

struct TwoQubitSynth {
    Circuit circuit{2};
    /// When present: u = circuit_matrix * diag(*residual_diagonal), i.e. the
    /// diagonal acts before the circuit in time.
    std::optional<Eigen::Vector4cd> residual_diagonal;
};

/// Three-CNOT circuit for any two-qubit unitary.
TwoQubitSynth kak3(const ComplexMatrix& u, double tol = 1e-10);

/// Two-CNOT circuit equal to u up to a diagonal applied first.
TwoQubitSynth kak2_up_to_diagonal(const ComplexMatrix& u, double tol = 1e-10);

}  // namespace bzxz
