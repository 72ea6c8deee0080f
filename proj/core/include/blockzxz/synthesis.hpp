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

#include "blockzxz/circuit.hpp"
#include "blockzxz/config.hpp"

namespace bzxz {

/// Throws PreconditionError unless u is a finite 2^n x 2^n unitary, n >= 1.
/// Returns n.
int validate_unitary_input(const ComplexMatrix& u, double unitarity_tol);

/// Recursive expansion only: the returned circuit still carries Generic1Q
/// and two-qubit GenericBlock leaves.
Circuit expand_to_leaves(const ComplexMatrix& u, const SynthesisConfig& cfg = {});

/// Full synthesis into H, Z, RX, RY, RZ, CNOT, CZ and a global phase.
Circuit synthesize(const ComplexMatrix& u, const SynthesisConfig& cfg = {});

}  // namespace bzxz
