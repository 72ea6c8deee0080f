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

#include "blockzxz/optimizer.hpp"

#include "blockzxz/errors.hpp"
#include "blockzxz/smallgate.hpp"
#include "blockzxz/ucr.hpp"
#include "blockzxz/zxz.hpp"

namespace bzxz {

OptLevel opt_level_from_int(int level) {
    switch (level) {
        case 0: return OptLevel::L0;
        case 1: return OptLevel::L1;
        case 2: return OptLevel::L2;
        case 3: return OptLevel::L3;
        default: throw PreconditionError("optimization level must be 0..3");
    }
}

std::string_view to_string(OptLevel level) {
    switch (level) {
        case OptLevel::L0: return "L0";
        case OptLevel::L1: return "L1";
        case OptLevel::L2: return "L2";
        case OptLevel::L3: return "L3";
    }
    return "?";
}

namespace {

Gate child_gate(const ComplexMatrix& m, int num_qubits) {
    if (num_qubits == 2) return Gate::generic_1q(1, m);
    std::vector<int> qs;
    for (int q = 1; q < num_qubits; ++q) qs.push_back(q);
    return Gate::generic_block(std::move(qs), m);
}

ComplexMatrix z_on_top(Eigen::Index dim) {
    ComplexMatrix z = identity(dim);
    z.bottomRightCorner(dim / 2, dim / 2) *= -1.0;
    return z;
}

int node_qubits(const ComplexMatrix& u) {
    const int m = log2_exact(u.rows());
    if (u.rows() != u.cols() || m < 2) {
        throw PreconditionError("node assembly needs a 2^m x 2^m matrix with m >= 2");
    }
    return m;
}

}  // namespace

CentralMerge merge_central(const ComplexMatrix& v_c, const ComplexMatrix& w_a,
                           const ComplexMatrix& b) {
    const Eigen::Index dim = b.rows();
    if (dim < 4 || log2_exact(dim) < 0 || v_c.rows() != dim || w_a.rows() != dim) {
        throw PreconditionError("merge_central needs equal dimensions 2^m with m >= 2");
    }
    const ComplexMatrix z = z_on_top(dim);
    CentralMerge out;
    out.first = w_a * v_c;
    out.second = z * w_a * b * v_c * z;
    return out;
}

Circuit assemble_node_basic(const ComplexMatrix& u, const Tolerances& tol) {
    const int m = node_qubits(u);
    const BlockZXZFactors f = compute_zxz_factors(u, tol);
    const Eigen::Index h = f.B.rows();
    const DemuxFactors da = demultiplex(f.A1, f.A2, tol);
    const DemuxFactors db = demultiplex(identity(h), f.B, tol);
    const DemuxFactors dc = demultiplex(identity(h), f.C, tol);

    Circuit c(m);
    c.append(child_gate(dc.W, m));
    append_ucrz(c, {0, alphas_from_diagonal(dc.d, tol.unitarity)}, UcrzVariant::Standard,
                TerminalCnot::Keep);
    c.append(Gate::h(0));
    c.append(child_gate(db.W * dc.V, m));
    append_ucrz(c, {0, alphas_from_diagonal(db.d, tol.unitarity)}, UcrzVariant::Standard,
                TerminalCnot::Keep);
    c.append(child_gate(da.W * db.V, m));
    c.append(Gate::h(0));
    append_ucrz(c, {0, alphas_from_diagonal(da.d, tol.unitarity)}, UcrzVariant::Standard,
                TerminalCnot::Keep);
    c.append(child_gate(da.V, m));
    return c;
}

Circuit assemble_node_merged(const ComplexMatrix& u, const Tolerances& tol) {
    const int m = node_qubits(u);
    if (m < 3) throw PreconditionError("merged node assembly needs at least three qubits");
    const BlockZXZFactors f = compute_zxz_factors(u, tol);
    const Eigen::Index h = f.B.rows();
    const DemuxFactors da = demultiplex(f.A1, f.A2, tol);
    const DemuxFactors dc = demultiplex(identity(h), f.C, tol);
    const CentralMerge mid = merge_central(dc.V, da.W, f.B);
    const DemuxFactors db = demultiplex(mid.first, mid.second, tol);

    Circuit c(m);
    c.append(child_gate(dc.W, m));
    append_ucrz(c, {0, alphas_from_diagonal(dc.d, tol.unitarity)}, UcrzVariant::Standard,
                TerminalCnot::DropLast);
    c.append(Gate::h(0));
    c.append(child_gate(db.W, m));
    append_ucrz(c, {0, alphas_from_diagonal(db.d, tol.unitarity)}, UcrzVariant::Standard,
                TerminalCnot::Keep);
    c.append(child_gate(db.V, m));
    c.append(Gate::h(0));
    append_ucrz(c, {0, alphas_from_diagonal(da.d, tol.unitarity)}, UcrzVariant::Reversed,
                TerminalCnot::DropFirst);
    c.append(child_gate(da.V, m));
    return c;
}

bool commutes_with_low_diagonal(const Gate& g, int num_qubits) {
    const auto low = [num_qubits](int q) { return q >= num_qubits - 2; };
    bool touches = false;
    for (int q : g.qubits) touches = touches || low(q);
    if (!touches) return true;
    switch (g.kind) {
        case GateKind::Z:
        case GateKind::RZ:
        case GateKind::CZ:
        case GateKind::Diagonal:
        case GateKind::UcrzFirst:
        case GateKind::GlobalPhase:
            return true;
        case GateKind::CNOT:
            return !low(g.qubits[1]);
        default:
            return false;
    }
}

Circuit lower_leaves(const Circuit& ir, const Tolerances& tol) {
    Circuit out(ir.num_qubits());
    out.set_global_phase(ir.global_phase());
    for (const Gate& g : ir.gates()) {
        if (g.kind == GateKind::Generic1Q) {
            append_one_qubit(out, g.qubits[0], g.matrix);
        } else if (g.kind == GateKind::GenericBlock && g.qubits.size() == 2) {
            Circuit leaf = kak3(g.matrix, tol.factor).circuit;
            out.append(leaf, g.qubits[0]);
        } else if (is_elementary(g.kind)) {
            out.append(g);
        } else {
            throw LoweringError("no lowering for " + std::string(to_string(g.kind)));
        }
    }
    return out;
}

Circuit migrate_diagonals(const Circuit& ir, const Tolerances& tol) {
    const int n = ir.num_qubits();
    const auto& gates = ir.gates();
    std::vector<std::size_t> leaves;
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        if (g.kind != GateKind::GenericBlock) continue;
        if (g.qubits != std::vector<int>{n - 2, n - 1}) {
            throw StructuralError("diagonal migration: leaf is not on the bottom two qubits");
        }
        leaves.push_back(i);
    }

    std::vector<Circuit> lowered(leaves.size(), Circuit(2));
    std::optional<Eigen::Vector4cd> pending;
    for (std::size_t li = leaves.size(); li-- > 0;) {
        ComplexMatrix m = gates[leaves[li]].matrix;
        if (pending) m = pending->asDiagonal() * m;
        if (li == 0) {
            lowered[li] = kak3(m, tol.factor).circuit;
            pending.reset();
            break;
        }
        TwoQubitSynth s = kak2_up_to_diagonal(m, tol.factor);
        lowered[li] = std::move(s.circuit);
        pending = s.residual_diagonal;
        for (std::size_t k = leaves[li - 1] + 1; k < leaves[li]; ++k) {
            if (!commutes_with_low_diagonal(gates[k], n)) {
                throw StructuralError("diagonal migration: " + std::string(to_string(gates[k].kind)) +
                                      " blocks the diagonal");
            }
        }
    }

    Circuit out(n);
    out.set_global_phase(ir.global_phase());
    std::size_t next = 0;
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        if (next < leaves.size() && leaves[next] == i) {
            out.append(lowered[next], n - 2);
            ++next;
        } else if (g.kind == GateKind::Generic1Q) {
            append_one_qubit(out, g.qubits[0], g.matrix);
        } else if (is_elementary(g.kind)) {
            out.append(g);
        } else {
            throw LoweringError("no lowering for " + std::string(to_string(g.kind)));
        }
    }
    return out;
}

std::int64_t expected_count(int n, OptLevel level) {
    if (n < 1) throw PreconditionError("expected_count: n must be >= 1");
    if (n > 28) throw ResourceError("expected_count: n must be <= 28");
    if (n == 1) return 0;
    std::int64_t c = level == OptLevel::L0 ? 6 : 3;
    const std::int64_t node_saving =
        (level >= OptLevel::L2 ? 2 : 0) + (level == OptLevel::L3 ? 3 : 0);
    for (int m = 3; m <= n; ++m) {
        c = 4 * c + 3 * (std::int64_t{1} << (m - 1)) - node_saving;
    }
    return c;
}

std::int64_t lower_bound_count(int n) {
    if (n < 1) throw PreconditionError("lower_bound_count: n must be >= 1");
    if (n > 28) throw ResourceError("lower_bound_count: n must be <= 28");
    const std::int64_t num = (std::int64_t{1} << (2 * n)) - 3 * n - 1;
    return (num + 3) / 4;
}

}  // namespace bzxz
