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

#include "matrix_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <blockzxz/emit.hpp>
#include <blockzxz/errors.hpp>

namespace bzxz::cli {

ComplexMatrix read_matrix(std::istream& in, bool check_unitary, double unitarity_tol) {
    long long d = 0;
    if (!(in >> d) || d < 1) throw PreconditionError("matrix file: missing dimension");
    if (log2_exact(static_cast<Eigen::Index>(d)) < 0) {
        throw PreconditionError("matrix file: dimension " + std::to_string(d) +
                                " is not a power of two");
    }
    if (d > (1 << 14)) throw ResourceError("matrix file: dimension too large");
    ComplexMatrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            double re = 0.0;
            double im = 0.0;
            if (!(in >> re >> im)) {
                throw PreconditionError("matrix file: expected " + std::to_string(d * d) +
                                        " complex entries");
            }
            m(i, j) = {re, im};
        }
    }
    std::string rest;
    if (in >> rest) throw PreconditionError("matrix file: trailing data");
    if (!all_finite(m)) throw PreconditionError("matrix file: non-finite entry");
    if (check_unitary && !is_unitary(m, unitarity_tol)) {
        throw PreconditionError("matrix file: matrix is not unitary (error " +
                                std::to_string(unitarity_error(m)) + ")");
    }
    return m;
}

ComplexMatrix read_matrix_file(const std::string& path, bool check_unitary,
                               double unitarity_tol) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read " + path);
    return read_matrix(in, check_unitary, unitarity_tol);
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
    out << m.rows() << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << "  ";
            out << format_double(m(i, j).real()) << " " << format_double(m(i, j).imag());
        }
        out << "\n";
    }
}

}  // namespace bzxz::cli
