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

#include "blockzxz/numerics.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "blockzxz/errors.hpp"

namespace bzxz {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

ComplexMatrix identity(Eigen::Index dim) { return ComplexMatrix::Identity(dim, dim); }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw StructuralError("max_abs_diff: dimension mismatch");
    }
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_error(const ComplexMatrix& u) {
    if (u.rows() != u.cols() || u.rows() == 0) return std::numeric_limits<double>::infinity();
    return max_abs_diff(u.adjoint() * u, identity(u.rows()));
}

bool is_unitary(const ComplexMatrix& u, double tol) {
    return all_finite(u) && unitarity_error(u) <= tol;
}

bool all_finite(const ComplexMatrix& m) {
    for (Eigen::Index k = 0; k < m.size(); ++k) {
        const cplx z = m.data()[k];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

int log2_exact(Eigen::Index dim) {
    if (dim <= 0) return -1;
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) ++n;
    return (Eigen::Index{1} << n) == dim ? n : -1;
}

SVDResult svd(const ComplexMatrix& m, double factor_tol) {
    if (m.rows() != m.cols()) throw PreconditionError("svd: square input required");
    if (!all_finite(m)) throw PreconditionError("svd: non-finite entry");

    Eigen::JacobiSVD<ComplexMatrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SVDResult out{solver.matrixU(), solver.singularValues(), solver.matrixV().adjoint()};

    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double residual =
        max_abs_diff(out.V * out.sigma.cast<cplx>().asDiagonal() * out.Wd, m);
    if (!(residual <= factor_tol * scale)) {
        throw FactorizationError("svd did not reproduce its input", residual);
    }
    return out;
}

PolarResult polar(const ComplexMatrix& m, double factor_tol) {
    const SVDResult f = svd(m, factor_tol);
    PolarResult out;
    out.S = f.V * f.sigma.cast<cplx>().asDiagonal() * f.V.adjoint();
    // Hermitian by construction; symmetrize away rounding.
    out.S = (0.5 * (out.S + out.S.adjoint())).eval();
    out.Uf = f.V * f.Wd;
    return out;
}

UnitaryEig unitary_eig(const ComplexMatrix& u, double unitarity_tol, double factor_tol) {
    if (!is_unitary(u, unitarity_tol)) {
        throw PreconditionError("unitary_eig: input is not unitary");
    }
    // The Schur form of a normal matrix is diagonal, and the Schur vectors
    // are orthonormal whatever the eigenvalue multiplicities.
    Eigen::ComplexSchur<ComplexMatrix> schur(u, true);
    if (schur.info() != Eigen::Success) {
        throw FactorizationError("unitary_eig: Schur iteration did not converge",
                                 std::numeric_limits<double>::infinity());
    }
    UnitaryEig out{schur.matrixU(), schur.matrixT().diagonal()};
    for (Eigen::Index k = 0; k < out.lambda.size(); ++k) {
        out.lambda(k) /= std::abs(out.lambda(k));
    }
    const double residual =
        max_abs_diff(out.V * out.lambda.asDiagonal() * out.V.adjoint(), u);
    if (!(residual <= factor_tol)) {
        throw FactorizationError("unitary_eig did not reproduce its input", residual);
    }
    return out;
}

double principal_arg(cplx z) {
    const double a = std::arg(z);
    return a <= -kPi ? kPi : a;
}

cplx principal_sqrt_phase(cplx z, double unitarity_tol) {
    if (!(std::abs(std::abs(z) - 1.0) <= unitarity_tol)) {
        throw PreconditionError("principal_sqrt_phase: |z| != 1");
    }
    return std::polar(1.0, 0.5 * principal_arg(z));
}

ComplexMatrix haar_random_unitary(Eigen::Index dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix z(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z(i, j) = cplx(re, im);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix& r = qr.matrixQR();
    for (Eigen::Index j = 0; j < dim; ++j) {
        const cplx d = r(j, j);
        const double mag = std::abs(d);
        q.col(j) *= mag > 0.0 ? d / mag : cplx(1.0);
    }
    return q;
}

ComplexMatrix haar_random_unitary(Eigen::Index dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return haar_random_unitary(dim, rng);
}

}  // namespace bzxz
