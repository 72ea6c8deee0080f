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

#include "blockzxz/synthesis.hpp"

#include <string>

#include "blockzxz/errors.hpp"
#include "blockzxz/optimizer.hpp"

namespace bzxz {

namespace {

class Expander {
  public:
    Expander(const SynthesisConfig& cfg, bool verify, Circuit& out)
        : cfg_(cfg), verify_(verify), out_(out) {}

    void expand(const ComplexMatrix& u, int offset, const std::string& path) {
        const int m = log2_exact(u.rows());
        if (m == 1) {
            out_.append(Gate::generic_1q(offset, u));
            return;
        }
        if (m == 2 && cfg_.level != OptLevel::L0) {
            out_.append(Gate::generic_block({offset, offset + 1}, u));
            return;
        }
        const bool merged = cfg_.level >= OptLevel::L2 && m >= 3;
        Circuit frag = merged ? assemble_node_merged(u, cfg_.tol) : assemble_node_basic(u, cfg_.tol);
        if (verify_) {
            const double res = max_abs_diff(circuit_to_unitary(frag, cfg_.simulation_cap), u);
            if (!(res <= cfg_.tol.node)) {
                throw SynthesisError(path, "node fragment does not reproduce its unitary", res);
            }
        }
        out_.multiply_phase(frag.global_phase());
        int child = 0;
        for (const Gate& g : frag.gates()) {
            if (g.kind == GateKind::Generic1Q || g.kind == GateKind::GenericBlock) {
                expand(g.matrix, offset + g.qubits[0], path + "." + std::to_string(child++));
                continue;
            }
            Gate shifted = g;
            for (int& q : shifted.qubits) q += offset;
            out_.append(std::move(shifted));
        }
    }

  private:
    const SynthesisConfig& cfg_;
    bool verify_;
    Circuit& out_;
};

}  // namespace

int validate_unitary_input(const ComplexMatrix& u, double unitarity_tol) {
    if (u.rows() != u.cols()) throw PreconditionError("matrix is not square");
    const int n = log2_exact(u.rows());
    if (n < 1) throw PreconditionError("dimension must be 2^n with n >= 1");
    if (!all_finite(u)) throw PreconditionError("matrix has non-finite entries");
    if (!is_unitary(u, unitarity_tol)) {
        throw PreconditionError("matrix is not unitary (error " +
                                std::to_string(unitarity_error(u)) + ")");
    }
    return n;
}

Circuit expand_to_leaves(const ComplexMatrix& u, const SynthesisConfig& cfg) {
    const int n = validate_unitary_input(u, cfg.tol.unitarity);
    Circuit out(n);
    Expander(cfg, cfg.verify_nodes_for(n) && n <= cfg.simulation_cap, out).expand(u, 0, "root");
    return out;
}

Circuit synthesize(const ComplexMatrix& u, const SynthesisConfig& cfg) {
    const Circuit ir = expand_to_leaves(u, cfg);
    Circuit out = cfg.level == OptLevel::L3 ? migrate_diagonals(ir, cfg.tol) : lower_leaves(ir, cfg.tol);
    const int n = out.num_qubits();
    if (cfg.verify_nodes_for(n) && n <= cfg.simulation_cap) {
        const double dist = distance_up_to_phase(u, circuit_to_unitary(out, cfg.simulation_cap));
        if (!(dist <= cfg.tol.verify)) {
            throw SynthesisError("root", "synthesized circuit does not match the input", dist);
        }
    }
    return out;
}

}  // namespace bzxz
