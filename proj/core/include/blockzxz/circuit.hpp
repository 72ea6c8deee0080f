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
#include <string_view>
#include <vector>

#include "blockzxz/numerics.hpp"

namespace bzxz {

/// Gate kinds. The first block (H .. CZ) plus GlobalPhase forms the
/// elementary set; the rest are pseudo-gates used while synthesizing.
enum class GateKind {
    H,
    Z,
    RX,
    RY,
    RZ,
    CNOT,
    CZ,
    Generic1Q,
    GenericBlock,
    UcrzFirst,
    Multiplexor,
    Diagonal,
    GlobalPhase,
};

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);
bool is_elementary(GateKind kind);

enum class LoweringLevel { IR, Elementary };

/// One gate. Qubit 0 is the most significant bit of a basis index; for a
/// multi-qubit gate qubits[0] is the most significant bit of the gate's
/// local matrix.
///
/// Rotation conventions:
///   RZ(t) = diag(e^{-it/2}, e^{it/2})
///   RY(t) = [[cos t/2, sin t/2], [-sin t/2, cos t/2]]
///   RX(t) = [[cos t/2, i sin t/2], [i sin t/2, cos t/2]]
/// CNOT stores (control, target). UcrzFirst stores (target, controls...) and
/// the angles alpha_j; its matrix is D (+) D^dagger with D_j = e^{-i alpha_j/2}.
/// Multiplexor stores (select, rest...) and its full block-diagonal matrix.
struct Gate {
    GateKind kind = GateKind::GlobalPhase;
    std::vector<int> qubits;
    std::vector<double> angles;
    ComplexMatrix matrix;
    ComplexVector diagonal;
    cplx phase{1.0, 0.0};

    static Gate h(int q);
    static Gate z(int q);
    static Gate rx(int q, double theta);
    static Gate ry(int q, double theta);
    static Gate rz(int q, double theta);
    static Gate cnot(int control, int target);
    static Gate cz(int a, int b);
    static Gate generic_1q(int q, ComplexMatrix u);
    static Gate generic_block(std::vector<int> qubits, ComplexMatrix u);
    static Gate ucrz_first(std::vector<int> qubits, std::vector<double> alphas);
    static Gate multiplexor(std::vector<int> qubits, ComplexMatrix u);
    static Gate diagonal_gate(std::vector<int> qubits, ComplexVector d);
    static Gate global_phase(cplx phase);

    friend bool operator==(const Gate& a, const Gate& b);
};

/// Checks qubit ranges, arity, and unitarity of embedded data.
void validate_gate(const Gate& g, int num_qubits, double unitarity_tol = 1e-10);

/// Matrix of the gate on its own qubits (2^k x 2^k).
ComplexMatrix local_matrix(const Gate& g);

/// 2^n x 2^n matrix of the gate embedded into an n-qubit register.
ComplexMatrix gate_matrix(const Gate& g, int num_qubits);

/// A time-ordered gate sequence. Its unitary is
/// global_phase * G_last * ... * G_first.
class Circuit {
  public:
    explicit Circuit(int num_qubits);

    int num_qubits() const noexcept { return num_qubits_; }
    const std::vector<Gate>& gates() const noexcept { return gates_; }
    cplx global_phase() const noexcept { return global_phase_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }

    Circuit& append(Gate g);
    /// Appends every gate of other with qubit indices shifted by offset, and
    /// folds other's global phase into this circuit.
    Circuit& append(const Circuit& other, int offset = 0);
    Circuit& multiply_phase(cplx phase);
    void set_global_phase(cplx phase) { global_phase_ = phase; }

    LoweringLevel lowering_level() const;

    friend bool operator==(const Circuit& a, const Circuit& b);

  private:
    int num_qubits_;
    cplx global_phase_{1.0, 0.0};
    std::vector<Gate> gates_;
};

/// Left-multiplies the rows of state (2^n x m) by the embedded gate.
void apply_gate(const Gate& g, int num_qubits, ComplexMatrix& state);

/// Exact unitary of the circuit, computed by applying gates to the basis
/// columns. Throws ResourceError beyond simulation_cap qubits.
ComplexMatrix circuit_to_unitary(const Circuit& c, int simulation_cap = 10);

/// Number of CNOT plus CZ gates. Requires an elementary circuit.
std::int64_t cnot_count(const Circuit& c);
/// Number of H, Z, RX, RY, RZ gates.
std::int64_t one_qubit_count(const Circuit& c);

/// sqrt(1 - |tr(U^dagger V)| / 2^n), evaluated as the phase-aligned
/// Frobenius residual so that it stays accurate near zero.
double distance_up_to_phase(const ComplexMatrix& u, const ComplexMatrix& v);

}  // namespace bzxz
