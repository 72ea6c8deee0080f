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

#include "blockzxz/smallgate.hpp"

#include <array>
#include <cmath>

#include "blockzxz/errors.hpp"

namespace bzxz {

namespace {

constexpr cplx kI{0.0, 1.0};

const Eigen::Matrix4cd& magic() {
    static const Eigen::Matrix4cd m = [] {
        Eigen::Matrix4cd g;
        const double s = 1.0 / std::sqrt(2.0);
        g << 1, kI, 0, 0,
             0, 0, kI, 1,
             0, 0, kI, -1,
             1, -kI, 0, 0;
        return Eigen::Matrix4cd(g * s);
    }();
    return m;
}

Eigen::Matrix2cd pauli(char which) {
    Eigen::Matrix2cd p;
    switch (which) {
        case 'x': p << 0, 1, 1, 0; break;
        case 'y': p << 0, -kI, kI, 0; break;
        case 'z': p << 1, 0, 0, -1; break;
        default: p.setIdentity();
    }
    return p;
}

Eigen::Matrix2cd hadamard() {
    Eigen::Matrix2cd h;
    h << 1, 1, 1, -1;
    return h / std::sqrt(2.0);
}

// Splits k = a (x) b for k in SU(2) (x) SU(2).
void kron_factor(const Eigen::Matrix4cd& k, ComplexMatrix& a, ComplexMatrix& b) {
    int bi = 0;
    int bj = 0;
    double best = -1.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double nrm = k.block<2, 2>(2 * i, 2 * j).norm();
            if (nrm > best) {
                best = nrm;
                bi = i;
                bj = j;
            }
        }
    }
    Eigen::Matrix2cd blk = k.block<2, 2>(2 * bi, 2 * bj);
    b = blk / std::sqrt(blk.determinant());
    a.resize(2, 2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            a(i, j) = (b.adjoint() * k.block<2, 2>(2 * i, 2 * j)).trace() / 2.0;
        }
    }
}

// Multiplies the circuit phase so that its matrix matches u exactly, then
// checks the residual of target against the circuit matrix times right.
void align_phase(TwoQubitSynth& out, const ComplexMatrix& u, const ComplexMatrix& right,
                 double tol, const char* who) {
    const ComplexMatrix m = circuit_to_unitary(out.circuit) * right;
    const cplx t = (m.adjoint() * u).trace();
    if (std::abs(t) > 0) out.circuit.multiply_phase(t / std::abs(t));
    const double res = max_abs_diff(circuit_to_unitary(out.circuit) * right, u);
    if (!(res <= tol)) throw SynthesisError(who, "two-qubit reconstruction failed", res);
}

void check_two_qubit(const ComplexMatrix& u, double tol) {
    if (u.rows() != 4 || u.cols() != 4) throw PreconditionError("expected a 4x4 matrix");
    if (!all_finite(u) || !is_unitary(u, tol)) throw PreconditionError("matrix is not unitary");
}

}  // namespace

ZYZAngles zyz(const ComplexMatrix& u) {
    if (u.rows() != 2 || u.cols() != 2) throw PreconditionError("zyz expects a 2x2 matrix");
    const cplx det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    ZYZAngles r;
    r.phi = std::arg(det) / 2.0;
    const cplx scale = std::polar(1.0, -r.phi);
    const cplx a = scale * u(0, 0);
    const cplx b = scale * u(0, 1);
    r.beta = 2.0 * std::atan2(std::abs(b), std::abs(a));
    const double arg_a = std::abs(a) > 0 ? std::arg(a) : 0.0;
    const double arg_b = std::abs(b) > 0 ? std::arg(b) : 0.0;
    r.alpha = -arg_a - arg_b;
    r.gamma = -arg_a + arg_b;
    return r;
}

void append_one_qubit(Circuit& out, int q, const ComplexMatrix& u) {
    const ZYZAngles z = zyz(u);
    out.append(Gate::rz(q, z.gamma));
    out.append(Gate::ry(q, z.beta));
    out.append(Gate::rz(q, z.alpha));
    out.multiply_phase(std::polar(1.0, z.phi));
}

ComplexMatrix canonical_gate(double a, double b, double c) {
    // diagonal in the magic basis
    const Eigen::Vector4cd d(std::polar(1.0, a - b + c), std::polar(1.0, -a + b + c),
                             std::polar(1.0, a + b - c), std::polar(1.0, -a - b - c));
    return magic() * d.asDiagonal() * magic().adjoint();
}

KakDecomposition kak_decompose(const ComplexMatrix& u) {
    check_two_qubit(u, 1e-8);
    const Eigen::Matrix4cd& mg = magic();
    const cplx det = Eigen::Matrix4cd(u).determinant();
    const Eigen::Matrix4cd us = u / std::pow(det, 0.25);
    const Eigen::Matrix4cd up = mg.adjoint() * us * mg;
    const Eigen::Matrix4cd p = up.transpose() * up;

    // P is complex symmetric with commuting real and imaginary parts; a generic
    // real combination of the two shares their eigenvectors.
    static constexpr std::array<double, 7> kMix{0.0, 1.0, 0.5, 2.0, -0.7, 3.1, 0.13};
    Eigen::Matrix4d q_best;
    double best = std::numeric_limits<double>::infinity();
    for (double t : kMix) {
        const Eigen::Matrix4d sym = p.real() + t * p.imag();
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(sym);
        const Eigen::Matrix4d q = es.eigenvectors();
        Eigen::Matrix4cd d = q.transpose().cast<cplx>() * p * q.cast<cplx>();
        d.diagonal().setZero();
        const double off = d.cwiseAbs().maxCoeff();
        if (off < best) {
            best = off;
            q_best = q;
        }
        if (best < 1e-13) break;
    }
    Eigen::Matrix4d q = q_best;
    if (q.determinant() < 0) q.col(0) *= -1.0;

    const Eigen::Matrix4cd pd = q.transpose().cast<cplx>() * p * q.cast<cplx>();
    Eigen::Vector4cd dl;
    for (int i = 0; i < 4; ++i) dl(i) = std::sqrt(pd(i, i));
    if ((dl(0) * dl(1) * dl(2) * dl(3)).real() < 0) dl(0) = -dl(0);

    const Eigen::Matrix4d o1 = (up * q.cast<cplx>() * dl.cwiseInverse().asDiagonal()).real();
    const Eigen::Matrix4cd k1 = mg * o1.cast<cplx>() * mg.adjoint();
    const Eigen::Matrix4cd k2 = mg * q.transpose().cast<cplx>() * mg.adjoint();

    Eigen::Vector4d lam;
    for (int i = 0; i < 4; ++i) lam(i) = std::arg(dl(i));
    KakDecomposition r;
    r.a = (lam(0) - lam(1) + lam(2) - lam(3)) / 4.0;
    r.b = (-lam(0) + lam(1) + lam(2) - lam(3)) / 4.0;
    r.c = (lam(0) + lam(1) - lam(2) - lam(3)) / 4.0;
    kron_factor(k1, r.a1, r.b1);
    kron_factor(k2, r.a2, r.b2);

    const ComplexMatrix m = kron(r.a1, r.b1) * canonical_gate(r.a, r.b, r.c) * kron(r.a2, r.b2);
    const cplx t = (m.adjoint() * u).trace();
    r.phase = t / std::abs(t);
    return r;
}

TwoQubitSynth kak3(const ComplexMatrix& u, double tol) {
    check_two_qubit(u, tol);
    const KakDecomposition k = kak_decompose(u);
    Eigen::Matrix2cd s = Eigen::Matrix2cd::Identity();
    s(1, 1) = kI;

    // can(a,b,c) = e^{i pi/4} (I (x) S^dag) core (S (x) I)
    TwoQubitSynth out;
    Circuit& c = out.circuit;
    append_one_qubit(c, 0, s * k.a2);
    append_one_qubit(c, 1, k.b2);
    c.append(Gate::cnot(1, 0));
    c.append(Gate::rz(0, kPi / 2 - 2 * k.c));
    c.append(Gate::ry(1, kPi / 2 - 2 * k.b));
    c.append(Gate::cnot(0, 1));
    c.append(Gate::ry(1, 2 * k.a - kPi / 2));
    c.append(Gate::cnot(1, 0));
    append_one_qubit(c, 0, k.a1);
    append_one_qubit(c, 1, k.b1 * s.adjoint());
    align_phase(out, u, identity(4), tol, "kak3");
    return out;
}

TwoQubitSynth kak2_up_to_diagonal(const ComplexMatrix& u, double tol) {
    check_two_qubit(u, tol);
    const Eigen::Matrix4cd& mg = magic();
    const cplx det = Eigen::Matrix4cd(u).determinant();
    const Eigen::Matrix4cd us = u / std::pow(det, 0.25);
    const Eigen::Matrix4cd qm = mg * mg.transpose();
    const Eigen::Matrix4cd a = us.transpose() * qm.conjugate() * us;
    const cplx p = a(0, 3) + a(3, 0);
    const cplx r = -(a(1, 2) + a(2, 1));
    const double psi = -std::arg(p - std::conj(r));
    const Eigen::Vector4cd delta(std::polar(1.0, psi), 1.0, std::polar(1.0, -psi), 1.0);
    const ComplexMatrix v = u * delta.asDiagonal();

    // After the diagonal, one canonical coordinate is a multiple of pi/2.
    KakDecomposition k = kak_decompose(v);
    std::array<double, 3> co{k.a, k.b, k.c};
    int pick = 0;
    double off_best = 2.0;
    for (int i = 0; i < 3; ++i) {
        const double x = co[static_cast<std::size_t>(i)] / (kPi / 2);
        const double off = std::abs(x - std::round(x));
        if (off < off_best) {
            off_best = off;
            pick = i;
        }
    }
    ComplexMatrix pre_a = k.a2, pre_b = k.b2, post_a = k.a1, post_b = k.b1;
    if (pick == 0) {
        const ComplexMatrix h = hadamard();
        post_a = post_a * h;
        post_b = post_b * h;
        pre_a = h * pre_a;
        pre_b = h * pre_b;
        co = {k.c, k.b, k.a};
    } else if (pick == 1) {
        const ComplexMatrix rot = (Eigen::Matrix2cd::Identity() - kI * pauli('x')) / std::sqrt(2.0);
        post_a = post_a * rot;
        post_b = post_b * rot;
        pre_a = rot.adjoint() * pre_a;
        pre_b = rot.adjoint() * pre_b;
        co = {k.a, k.c, k.b};
    }
    const long turns = std::lround(co[2] / (kPi / 2));
    if (turns % 2 != 0) {
        pre_a = pauli('z') * pre_a;
        pre_b = pauli('z') * pre_b;
    }

    // can(a,b,0) = (W (x) I) CNOT (Ry(2a) (x) Ry(2b)) CNOT (W^dag (x) I)
    const Eigen::Matrix2cd w =
        0.5 * Eigen::Matrix2cd::Identity() + 0.5 * kI * (pauli('x') + pauli('y') + pauli('z'));
    TwoQubitSynth out;
    Circuit& c = out.circuit;
    append_one_qubit(c, 0, w.adjoint() * pre_a);
    append_one_qubit(c, 1, pre_b);
    c.append(Gate::cnot(0, 1));
    c.append(Gate::ry(0, 2 * co[0]));
    c.append(Gate::ry(1, 2 * co[1]));
    c.append(Gate::cnot(0, 1));
    append_one_qubit(c, 0, post_a * w);
    append_one_qubit(c, 1, post_b);
    const Eigen::Vector4cd residual = delta.conjugate();
    out.residual_diagonal = residual;
    const ComplexMatrix right = residual.asDiagonal();
    align_phase(out, u, right, tol, "kak2");
    return out;
}

}  // namespace bzxz
