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

#include "blockzxz/circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "blockzxz/errors.hpp"

namespace bzxz {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 13> kKindNames{{
    {GateKind::H, "H"},
    {GateKind::Z, "Z"},
    {GateKind::RX, "RX"},
    {GateKind::RY, "RY"},
    {GateKind::RZ, "RZ"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::CZ, "CZ"},
    {GateKind::Generic1Q, "GENERIC_1Q"},
    {GateKind::GenericBlock, "GENERIC_BLOCK"},
    {GateKind::UcrzFirst, "UCRZ_FIRST"},
    {GateKind::Multiplexor, "MULTIPLEXOR"},
    {GateKind::Diagonal, "DIAGONAL"},
    {GateKind::GlobalPhase, "GLOBAL_PHASE"},
}};

bool is_diagonal_kind(GateKind kind) {
    switch (kind) {
        case GateKind::Z:
        case GateKind::RZ:
        case GateKind::CZ:
        case GateKind::Diagonal:
        case GateKind::UcrzFirst:
            return true;
        default:
            return false;
    }
}

ComplexVector local_diagonal(const Gate& g) {
    switch (g.kind) {
        case GateKind::Z:
            return ComplexVector{{1.0, -1.0}};
        case GateKind::RZ: {
            const double t = g.angles.at(0);
            return ComplexVector{{std::polar(1.0, -0.5 * t), std::polar(1.0, 0.5 * t)}};
        }
        case GateKind::CZ:
            return ComplexVector{{1.0, 1.0, 1.0, -1.0}};
        case GateKind::Diagonal:
            return g.diagonal;
        case GateKind::UcrzFirst: {
            const auto half = static_cast<Eigen::Index>(g.angles.size());
            ComplexVector d(2 * half);
            for (Eigen::Index j = 0; j < half; ++j) {
                d(j) = std::polar(1.0, -0.5 * g.angles[static_cast<std::size_t>(j)]);
                d(j + half) = std::conj(d(j));
            }
            return d;
        }
        default:
            throw StructuralError("local_diagonal: gate is not diagonal");
    }
}

bool unit_modulus(cplx z, double tol) { return std::abs(std::abs(z) - 1.0) <= tol; }

// Bit of basis index belonging to qubit q in an n-qubit register.
inline std::size_t qubit_bit(int q, int n) { return std::size_t{1} << (n - 1 - q); }

}  // namespace

std::string_view to_string(GateKind kind) {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) return name;
    }
    return "?";
}

GateKind gate_kind_from_string(std::string_view name) {
    for (const auto& [k, n] : kKindNames) {
        if (n == name) return k;
    }
    throw StructuralError("unknown gate kind '" + std::string(name) + "'");
}

bool is_elementary(GateKind kind) {
    switch (kind) {
        case GateKind::H:
        case GateKind::Z:
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::GlobalPhase:
            return true;
        default:
            return false;
    }
}

namespace {

Gate make_gate(GateKind kind, std::vector<int> qubits, std::vector<double> angles = {},
               ComplexMatrix matrix = {}, ComplexVector diagonal = {}) {
    Gate g;
    g.kind = kind;
    g.qubits = std::move(qubits);
    g.angles = std::move(angles);
    g.matrix = std::move(matrix);
    g.diagonal = std::move(diagonal);
    return g;
}

}  // namespace

Gate Gate::h(int q) { return make_gate(GateKind::H, {q}); }
Gate Gate::z(int q) { return make_gate(GateKind::Z, {q}); }
Gate Gate::rx(int q, double theta) { return make_gate(GateKind::RX, {q}, {theta}); }
Gate Gate::ry(int q, double theta) { return make_gate(GateKind::RY, {q}, {theta}); }
Gate Gate::rz(int q, double theta) { return make_gate(GateKind::RZ, {q}, {theta}); }
Gate Gate::cnot(int control, int target) { return make_gate(GateKind::CNOT, {control, target}); }
Gate Gate::cz(int a, int b) { return make_gate(GateKind::CZ, {a, b}); }
Gate Gate::generic_1q(int q, ComplexMatrix u) {
    return make_gate(GateKind::Generic1Q, {q}, {}, std::move(u));
}
Gate Gate::generic_block(std::vector<int> qubits, ComplexMatrix u) {
    return make_gate(GateKind::GenericBlock, std::move(qubits), {}, std::move(u));
}
Gate Gate::ucrz_first(std::vector<int> qubits, std::vector<double> alphas) {
    return make_gate(GateKind::UcrzFirst, std::move(qubits), std::move(alphas));
}
Gate Gate::multiplexor(std::vector<int> qubits, ComplexMatrix u) {
    return make_gate(GateKind::Multiplexor, std::move(qubits), {}, std::move(u));
}
Gate Gate::diagonal_gate(std::vector<int> qubits, ComplexVector d) {
    return make_gate(GateKind::Diagonal, std::move(qubits), {}, {}, std::move(d));
}
Gate Gate::global_phase(cplx phase) {
    Gate g = make_gate(GateKind::GlobalPhase, {});
    g.phase = phase;
    return g;
}

bool operator==(const Gate& a, const Gate& b) {
    return a.kind == b.kind && a.qubits == b.qubits && a.angles == b.angles &&
           a.matrix.rows() == b.matrix.rows() && a.matrix.cols() == b.matrix.cols() &&
           a.matrix == b.matrix && a.diagonal.size() == b.diagonal.size() &&
           a.diagonal == b.diagonal && a.phase == b.phase;
}

void validate_gate(const Gate& g, int num_qubits, double unitarity_tol) {
    const auto name = std::string(to_string(g.kind));
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
        const int q = g.qubits[i];
        if (q < 0 || q >= num_qubits) {
            throw StructuralError(name + ": qubit " + std::to_string(q) + " out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (g.qubits[j] == q) throw StructuralError(name + ": repeated qubit");
        }
    }
    const auto k = g.qubits.size();
    const auto local_dim = Eigen::Index{1} << k;
    auto expect_arity = [&](std::size_t want) {
        if (k != want) throw StructuralError(name + ": wrong number of qubits");
    };
    switch (g.kind) {
        case GateKind::H:
        case GateKind::Z:
            expect_arity(1);
            break;
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
            expect_arity(1);
            if (g.angles.size() != 1 || !std::isfinite(g.angles[0])) {
                throw StructuralError(name + ": expects one finite angle");
            }
            break;
        case GateKind::CNOT:
        case GateKind::CZ:
            expect_arity(2);
            break;
        case GateKind::Generic1Q:
            expect_arity(1);
            [[fallthrough]];
        case GateKind::GenericBlock:
        case GateKind::Multiplexor:
            if (k == 0 || (g.kind == GateKind::Multiplexor && k < 2)) {
                throw StructuralError(name + ": too few qubits");
            }
            if (g.matrix.rows() != local_dim || g.matrix.cols() != local_dim) {
                throw StructuralError(name + ": matrix size does not match qubit count");
            }
            if (!is_unitary(g.matrix, unitarity_tol)) {
                throw StructuralError(name + ": embedded matrix is not unitary");
            }
            if (g.kind == GateKind::Multiplexor) {
                const auto half = local_dim / 2;
                if (g.matrix.topRightCorner(half, half).cwiseAbs().maxCoeff() > unitarity_tol ||
                    g.matrix.bottomLeftCorner(half, half).cwiseAbs().maxCoeff() > unitarity_tol) {
                    throw StructuralError(name + ": matrix is not block diagonal");
                }
            }
            break;
        case GateKind::UcrzFirst:
            if (k < 2) throw StructuralError(name + ": needs a target and at least one control");
            if (static_cast<Eigen::Index>(g.angles.size()) != local_dim / 2) {
                throw StructuralError(name + ": expects 2^k angles");
            }
            for (double a : g.angles) {
                if (!std::isfinite(a)) throw StructuralError(name + ": non-finite angle");
            }
            break;
        case GateKind::Diagonal:
            if (k == 0 || g.diagonal.size() != local_dim) {
                throw StructuralError(name + ": diagonal length does not match qubit count");
            }
            for (Eigen::Index i = 0; i < g.diagonal.size(); ++i) {
                if (!unit_modulus(g.diagonal(i), unitarity_tol)) {
                    throw StructuralError(name + ": entry is not unit modulus");
                }
            }
            break;
        case GateKind::GlobalPhase:
            expect_arity(0);
            if (!unit_modulus(g.phase, unitarity_tol)) {
                throw StructuralError(name + ": phase is not unit modulus");
            }
            break;
    }
}

ComplexMatrix local_matrix(const Gate& g) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (g.kind) {
        case GateKind::H:
            return ComplexMatrix{{r, r}, {r, -r}};
        case GateKind::RX: {
            const double c = std::cos(0.5 * g.angles.at(0));
            const double s = std::sin(0.5 * g.angles.at(0));
            return ComplexMatrix{{c, cplx(0.0, s)}, {cplx(0.0, s), c}};
        }
        case GateKind::RY: {
            const double c = std::cos(0.5 * g.angles.at(0));
            const double s = std::sin(0.5 * g.angles.at(0));
            return ComplexMatrix{{c, s}, {-s, c}};
        }
        case GateKind::CNOT:
            return ComplexMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
        case GateKind::Generic1Q:
        case GateKind::GenericBlock:
        case GateKind::Multiplexor:
            return g.matrix;
        case GateKind::GlobalPhase:
            return ComplexMatrix::Constant(1, 1, g.phase);
        default:
            return local_diagonal(g).asDiagonal();
    }
}

ComplexMatrix gate_matrix(const Gate& g, int num_qubits) {
    validate_gate(g, num_qubits);
    ComplexMatrix m = identity(Eigen::Index{1} << num_qubits);
    apply_gate(g, num_qubits, m);
    return m;
}

void apply_gate(const Gate& g, int num_qubits, ComplexMatrix& state) {
    const auto dim = std::size_t{1} << num_qubits;
    if (static_cast<std::size_t>(state.rows()) != dim) {
        throw StructuralError("apply_gate: state has wrong number of rows");
    }
    const int k = static_cast<int>(g.qubits.size());

    if (g.kind == GateKind::GlobalPhase) {
        state *= g.phase;
        return;
    }
    if (g.kind == GateKind::CNOT) {
        const auto cbit = qubit_bit(g.qubits[0], num_qubits);
        const auto tbit = qubit_bit(g.qubits[1], num_qubits);
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & cbit) && !(i & tbit)) {
                state.row(static_cast<Eigen::Index>(i))
                    .swap(state.row(static_cast<Eigen::Index>(i | tbit)));
            }
        }
        return;
    }

    // offsets[l] is the register bit pattern of local basis index l.
    std::vector<std::size_t> offsets(std::size_t{1} << k, 0);
    std::size_t mask = 0;
    for (int j = 0; j < k; ++j) mask |= qubit_bit(g.qubits[static_cast<std::size_t>(j)], num_qubits);
    for (std::size_t l = 0; l < offsets.size(); ++l) {
        for (int j = 0; j < k; ++j) {
            if ((l >> (k - 1 - j)) & 1U) {
                offsets[l] |= qubit_bit(g.qubits[static_cast<std::size_t>(j)], num_qubits);
            }
        }
    }

    if (is_diagonal_kind(g.kind)) {
        const ComplexVector d = local_diagonal(g);
        for (std::size_t base = 0; base < dim; ++base) {
            if (base & mask) continue;
            for (std::size_t l = 0; l < offsets.size(); ++l) {
                state.row(static_cast<Eigen::Index>(base | offsets[l])) *= d(static_cast<Eigen::Index>(l));
            }
        }
        return;
    }

    const ComplexMatrix u = local_matrix(g);
    ComplexMatrix gathered(static_cast<Eigen::Index>(offsets.size()), state.cols());
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & mask) continue;
        for (std::size_t l = 0; l < offsets.size(); ++l) {
            gathered.row(static_cast<Eigen::Index>(l)) = state.row(static_cast<Eigen::Index>(base | offsets[l]));
        }
        gathered = (u * gathered).eval();
        for (std::size_t l = 0; l < offsets.size(); ++l) {
            state.row(static_cast<Eigen::Index>(base | offsets[l])) = gathered.row(static_cast<Eigen::Index>(l));
        }
    }
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1) throw StructuralError("circuit needs at least one qubit");
}

Circuit& Circuit::append(Gate g) {
    validate_gate(g, num_qubits_);
    gates_.push_back(std::move(g));
    return *this;
}

Circuit& Circuit::append(const Circuit& other, int offset) {
    if (offset < 0 || offset + other.num_qubits() > num_qubits_) {
        throw StructuralError("append: sub-circuit does not fit at this offset");
    }
    gates_.reserve(gates_.size() + other.gates_.size());
    for (Gate g : other.gates_) {
        for (int& q : g.qubits) q += offset;
        gates_.push_back(std::move(g));
    }
    global_phase_ *= other.global_phase_;
    return *this;
}

Circuit& Circuit::multiply_phase(cplx phase) {
    global_phase_ *= phase;
    return *this;
}

LoweringLevel Circuit::lowering_level() const {
    const bool elementary = std::all_of(gates_.begin(), gates_.end(),
                                        [](const Gate& g) { return is_elementary(g.kind); });
    return elementary ? LoweringLevel::Elementary : LoweringLevel::IR;
}

bool operator==(const Circuit& a, const Circuit& b) {
    return a.num_qubits_ == b.num_qubits_ && a.global_phase_ == b.global_phase_ &&
           a.gates_ == b.gates_;
}

ComplexMatrix circuit_to_unitary(const Circuit& c, int simulation_cap) {
    if (c.num_qubits() > simulation_cap) {
        throw ResourceError("circuit_to_unitary: " + std::to_string(c.num_qubits()) +
                            " qubits exceeds the simulation cap of " +
                            std::to_string(simulation_cap));
    }
    ComplexMatrix u = identity(Eigen::Index{1} << c.num_qubits());
    for (const Gate& g : c.gates()) apply_gate(g, c.num_qubits(), u);
    u *= c.global_phase();
    return u;
}

std::int64_t cnot_count(const Circuit& c) {
    if (c.lowering_level() != LoweringLevel::Elementary) {
        throw PreconditionError("cnot_count: circuit still contains pseudo-gates");
    }
    return std::count_if(c.gates().begin(), c.gates().end(), [](const Gate& g) {
        return g.kind == GateKind::CNOT || g.kind == GateKind::CZ;
    });
}

std::int64_t one_qubit_count(const Circuit& c) {
    return std::count_if(c.gates().begin(), c.gates().end(), [](const Gate& g) {
        switch (g.kind) {
            case GateKind::H:
            case GateKind::Z:
            case GateKind::RX:
            case GateKind::RY:
            case GateKind::RZ:
                return true;
            default:
                return false;
        }
    });
}

double distance_up_to_phase(const ComplexMatrix& u, const ComplexMatrix& v) {
    if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols() ||
        log2_exact(u.rows()) < 0) {
        throw StructuralError("distance_up_to_phase: dimension mismatch");
    }
    // ||U - e^{i phi} V||_F^2 = 2N - 2 Re(e^{i phi} tr(U^dagger V)); the
    // minimizing phi gives 2N (1 - |tr|/N) without cancellation.
    const cplx t = (u.adjoint() * v).trace();
    const cplx align = std::polar(1.0, -std::arg(t));
    const double n = static_cast<double>(u.rows());
    const double r = (u - align * v).squaredNorm() / (2.0 * n);
    return std::sqrt(r);
}

}  // namespace bzxz
