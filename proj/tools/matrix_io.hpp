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

#include <iosfwd>
#include <string>

#include <blockzxz/numerics.hpp>

namespace bzxz::cli {

/// Text matrix: first line d, then d lines of d "re im" pairs.
/// Throws PreconditionError when d is not a power of two, the text is
/// malformed, or (with check) the matrix is not unitary.
ComplexMatrix read_matrix(std::istream& in, bool check_unitary, double unitarity_tol);
ComplexMatrix read_matrix_file(const std::string& path, bool check_unitary,
                               double unitarity_tol);

void write_matrix(std::ostream& out, const ComplexMatrix& m);

}  // namespace bzxz::cli
