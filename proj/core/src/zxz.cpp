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

#include "blockzxz/zxz.hpp"

#include "blockzxz/errors.hpp"

namespace bzxz {

namespace {

constexpr cplx kI{0.0, 1.0};

Eigen::Index half_dim(const ComplexMatrix& u) {
    if (u.rows() != u.cols() || log2_exact(u.rows()) < 2) {
        throw PreconditionError("block split needs a square matrix of dimension 2^n, n >= 2");
    }
    return u.rows() / 2;
}

}  // namespace

BlockSplit split_blocks(const ComplexMatrix& u) {
    const Eigen::Index h = half_dim(u);
    return {u.topLeftCorner(h, h), u.topRightCorner(h, h), u.bottomLeftCorner(h, h),
            u.bottomRightCorner(h, h)};
}

ComplexMatrix zxz_product(const ComplexMatrix& a1, const ComplexMatrix& a2,
                          const ComplexMatrix& b, const ComplexMatrix& c) {
    const Eigen::Index h = b.rows();
    const ComplexMatrix id = identity(h);
    ComplexMatrix mid(2 * h, 2 * h);
    mid << id + b, id - b, id - b, id + b;
    return 0.5 * direct_sum(a1, a2) * mid * direct_sum(id, c);
}

BlockZXZFactors compute_zxz_factors(const ComplexMatrix& u, const Tolerances& tol) {
    const BlockSplit s = split_blocks(u);
    if (!is_unitary(u, tol.unitarity)) throw PreconditionError("block-ZXZ input is not unitary");
    const PolarResult px = polar(s.X, tol.factor);
    const PolarResult py = polar(s.Y, tol.factor);

    BlockZXZFactors f;
    f.S_X = px.S;
    f.U_X = px.Uf;
    f.S_Y = py.S;
    f.U_Y = py.Uf;
    const ComplexMatrix c_dag = kI * py.Uf.adjoint() * px.Uf;
    f.C = c_dag.adjoint();
    f.A1 = (px.S + kI * py.S) * px.Uf;
    f.A2 = s.U21 + s.U22 * c_dag;
    f.B = 2.0 * f.A1.adjoint() * s.X - identity(s.X.rows());
    f.residual = max_abs_diff(zxz_product(f.A1, f.A2, f.B, f.C), u);
    if (!(f.residual <= tol.node)) {
        throw SynthesisError("zxz", "block-ZXZ factors do not reproduce the input", f.residual);
    }
    return f;
}

DemuxFactors demultiplex(const ComplexMatrix& u1, const ComplexMatrix& u2, const Tolerances& tol) {
    if (u1.rows() != u2.rows() || u1.cols() != u2.cols() || u1.rows() != u1.cols()) {
        throw PreconditionError("demultiplex: blocks must be square and of equal size");
    }
    if (!is_unitary(u1, tol.unitarity) || !is_unitary(u2, tol.unitarity)) {
        throw PreconditionError("demultiplex: blocks must be unitary");
    }
    const UnitaryEig e = unitary_eig(u1 * u2.adjoint(), tol.unitarity, tol.factor);
    DemuxFactors out;
    out.V = e.V;
    out.d.resize(e.lambda.size());
    for (Eigen::Index k = 0; k < e.lambda.size(); ++k) {
        out.d(k) = principal_sqrt_phase(e.lambda(k), tol.unitarity);
    }
    out.W = out.d.asDiagonal() * e.V.adjoint() * u2;
    return out;
}

}  // namespace bzxz
