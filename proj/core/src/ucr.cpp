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

#include "blockzxz/ucr.hpp"

#include <bit>

#include "blockzxz/errors.hpp"

namespace bzxz {

namespace {

unsigned gray(unsigned j) { return j ^ (j >> 1); }

}  // namespace

int UcrzSpec::num_controls() const {
    const int k = log2_exact(static_cast<Eigen::Index>(alphas.size()));
    if (k < 1) throw PreconditionError("UCRZ needs 2^k angles with k >= 1");
    return k;
}

std::vector<double> alphas_from_diagonal(const ComplexVector& d, double unitarity_tol) {
    std::vector<double> out(static_cast<std::size_t>(d.size()));
    for (Eigen::Index j = 0; j < d.size(); ++j) {
        if (std::abs(std::abs(d(j)) - 1.0) > unitarity_tol) {
            throw PreconditionError("diagonal entry is not unit modulus");
        }
        out[static_cast<std::size_t>(j)] = -2.0 * principal_arg(d(j));
    }
    return out;
}

GraySchedule gray_schedule(int k) {
    if (k < 1 || k > 16) throw ResourceError("gray_schedule: k must be in 1..16");
    const unsigned len = 1u << k;
    GraySchedule s{k, {}};
    s.controls.reserve(len);
    for (unsigned j = 0; j < len; ++j) {
        const unsigned diff = gray(j) ^ gray((j + 1) % len);
        // bit (k-1) is position 1
        const int bit = std::countr_zero(diff);
        s.controls.push_back(k - bit);
    }
    return s;
}

Eigen::MatrixXi mk_matrix(int k) {
    if (k < 1 || k > 12) throw ResourceError("mk_matrix: k must be in 1..12");
    const unsigned len = 1u << k;
    Eigen::MatrixXi m(len, len);
    for (unsigned i = 0; i < len; ++i) {
        for (unsigned j = 0; j < len; ++j) {
            m(i, j) = (std::popcount(i & gray(j)) % 2) ? -1 : 1;
        }
    }
    return m;
}

std::vector<double> solve_thetas(const std::vector<double>& alphas) {
    const int k = log2_exact(static_cast<Eigen::Index>(alphas.size()));
    if (k < 1) throw PreconditionError("solve_thetas: length must be 2^k with k >= 1");
    if (k > 16) throw ResourceError("solve_thetas: too many controls");
    const unsigned len = 1u << k;
    std::vector<double> theta(len, 0.0);
    const double scale = 1.0 / static_cast<double>(len);
    for (unsigned j = 0; j < len; ++j) {
        const unsigned g = gray(j);
        double acc = 0.0;
        for (unsigned i = 0; i < len; ++i) {
            acc += (std::popcount(i & g) % 2) ? -alphas[i] : alphas[i];
        }
        theta[j] = acc * scale;
    }
    return theta;
}

void append_ucrz(Circuit& out, const UcrzSpec& spec, UcrzVariant variant, TerminalCnot terminal) {
    if ((terminal == TerminalCnot::DropLast && variant != UcrzVariant::Standard) ||
        (terminal == TerminalCnot::DropFirst && variant != UcrzVariant::Reversed)) {
        throw PreconditionError("UCRZ: DropLast pairs with Standard, DropFirst with Reversed");
    }
    const int k = spec.num_controls();
    const auto theta = solve_thetas(spec.alphas);
    const auto sched = gray_schedule(k);
    const std::size_t len = theta.size();

    std::vector<Gate> seq;
    seq.reserve(2 * len);
    for (std::size_t j = 0; j < len; ++j) {
        seq.push_back(Gate::rz(spec.target, theta[j]));
        if (terminal == TerminalCnot::DropLast && j + 1 == len) break;
        seq.push_back(Gate::cnot(spec.target + sched.controls[j], spec.target));
    }
    if (variant == UcrzVariant::Standard) {
        for (auto& g : seq) out.append(std::move(g));
        return;
    }
    std::size_t start = seq.size();
    if (terminal == TerminalCnot::DropFirst) --start;
    for (std::size_t i = start; i > 0; --i) out.append(std::move(seq[i - 1]));
}

Circuit synthesize_ucrz(const UcrzSpec& spec, UcrzVariant variant, TerminalCnot terminal) {
    Circuit c(spec.target + spec.num_controls() + 1);
    append_ucrz(c, spec, variant, terminal);
    return c;
}

}  // namespace bzxz
