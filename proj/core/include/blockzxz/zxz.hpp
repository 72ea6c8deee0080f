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

#include "blockzxz/config.hpp"
#include "blockzxz/numerics.hpp"

namespace bzxz {

/// Quarters of u = [X Y; U21 U22].
struct BlockSplit {
    ComplexMatrix X, Y, U21, U22;
};

BlockSplit split_blocks(const ComplexMatrix& u);

/// u = 1/2 (A1 (+) A2) [I+B I-B; I-B I+B] (I (+) C), together with the
/// polar factors of the top blocks.
struct BlockZXZFactors {
    ComplexMatrix A1, A2, B, C;
    ComplexMatrix S_X, U_X, S_Y, U_Y;
    double residual = 0.0;  ///< max-norm reconstruction error
};

BlockZXZFactors compute_zxz_factors(const ComplexMatrix& u, const Tolerances& tol = {});

/// Product of the block-ZXZ factors.
ComplexMatrix zxz_product(const ComplexMatrix& a1, const ComplexMatrix& a2,
                          const ComplexMatrix& b, const ComplexMatrix& c);

/// u1 = V diag(d) W and u2 = V diag(conj d) W.
struct DemuxFactors {
    ComplexMatrix V;
    ComplexVector d;
    ComplexMatrix W;
};

DemuxFactors demultiplex(const ComplexMatrix& u1, const ComplexMatrix& u2,
                         const Tolerances& tol = {});

}  // namespace bzxz
