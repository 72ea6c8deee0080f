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

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace bzxz {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

/// Singular value decomposition m = V * diag(sigma) * Wd, sigma non-increasing.
struct SVDResult {
    ComplexMatrix V;
    RealVector sigma;
    ComplexMatrix Wd;
};

/// Polar decomposition m = S * Uf with S Hermitian positive semi-definite.
struct PolarResult {
    ComplexMatrix S;
    ComplexMatrix Uf;
};

/// Spectral decomposition u = V * diag(lambda) * V^dagger of a unitary.
struct UnitaryEig {
    ComplexMatrix V;
    ComplexVector lambda;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix identity(Eigen::Index dim);

/// Largest absolute entry of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// max |U^dagger U - I|; infinite for non-square input.
double unitarity_error(const ComplexMatrix& u);
bool is_unitary(const ComplexMatrix& u, double tol);
bool all_finite(const ComplexMatrix& m);

/// Returns log2(dim) when dim is a power of two, otherwise -1.
int log2_exact(Eigen::Index dim);

SVDResult svd(const ComplexMatrix& m, double factor_tol = 1e-10);
PolarResult polar(const ComplexMatrix& m, double factor_tol = 1e-10);

/// Eigendecomposition of a unitary through its complex Schur form. The
/// eigenvector matrix stays unitary when eigenvalues are degenerate.
UnitaryEig unitary_eig(const ComplexMatrix& u, double unitarity_tol = 1e-10,
                       double factor_tol = 1e-10);

/// e^{i arg(z)/2} with arg(z) in (-pi, pi].
cplx principal_sqrt_phase(cplx z, double unitarity_tol = 1e-10);

/// arg(z) folded into (-pi, pi].
double principal_arg(cplx z);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// phases of R's diagonal moved into Q.
ComplexMatrix haar_random_unitary(Eigen::Index dim, std::mt19937_64& rng);
ComplexMatrix haar_random_unitary(Eigen::Index dim, std::uint64_t seed);

}  // namespace bzxz
