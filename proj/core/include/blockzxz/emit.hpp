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

#include <string>
#include <string_view>

#include "blockzxz/circuit.hpp"

namespace bzxz {

enum class EmitFormat { Qasm3Subset, Json };

/// Serializes a circuit. The QASM subset uses h, z, rx, ry, rz, cx, cz and
/// gphase with 17 significant digits and requires an elementary circuit.
/// ry/rx angles are negated on the way out so that the text follows the
/// OpenQASM rotation convention.
std::string emit(const Circuit& c, EmitFormat format);

/// Inverse of emit(c, Json); lossless.
Circuit parse_circuit_json(std::string_view text);

/// Inverse of emit(c, Qasm3Subset) for exactly the emitted subset.
Circuit parse_qasm_subset(std::string_view text);

/// printf("%.17g").
std::string format_double(double x);

}  // namespace bzxz
