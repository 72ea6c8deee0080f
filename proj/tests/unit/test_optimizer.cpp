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

#include <gtest/gtest.h>

#include <blockzxz/errors.hpp>
#include <blockzxz/optimizer.hpp>
#include <blockzxz/synthesis.hpp>

#include "oracles.hpp"

namespace {

using namespace bzxz;
using oracle::Mat;

std::int64_t count_kind(const Circuit& c, GateKind kind) {
    return std::count_if(c.gates().begin(), c.gates().end(), [kind](const Gate& g) { return g.kind == kind; });
}

Mat low_diagonal(oracle::Rng& rng, int n) {
    Eigen::VectorXcd d4 = rng.phases(4);
    return oracle::kron2(oracle::eye(Eigen::Index{1} << (n - 2)), oracle::diag_of(d4));
}

TEST(MergeCentral, IdentityMiddle) {
    oracle::Rng rng(51);
    const Mat vc = rng.unitary(4), wa = rng.unitary(4);
    const CentralMerge m = merge_central(vc, wa, oracle::eye(4));
    const Mat zi = oracle::kron2(oracle::pauli_z(), oracle::eye(2));
    EXPECT_LT(oracle::max_diff(m.first, wa * vc), 1e-14);
    EXPECT_LT(oracle::max_diff(m.second, zi * wa * vc * zi), 1e-14);
}

TEST(MergeCentral, CommutingDiagonalMiddle) {
    const Mat zi = oracle::kron2(oracle::pauli_z(), oracle::eye(2));
    const CentralMerge m = merge_central(oracle::eye(4), oracle::eye(4), zi);
    EXPECT_EQ(m.first, oracle::eye(4));
    EXPECT_LT(oracle::max_diff(m.second, zi), 1e-15);
}

TEST(MergeCentral, BlockIdentityBruteForce) {
    oracle::Rng rng(52);
    for (auto [dim, trials] : {std::pair{4, 100}, std::pair{8, 25}}) {
        const int m = log2_exact(dim) + 1;
        const Mat cz = oracle::controlled(oracle::pauli_z(), 0, 1, m);
        for (int t = 0; t < trials; ++t) {
            const Mat vc = rng.unitary(dim), wa = rng.unitary(dim), b = rng.unitary(dim);
            const CentralMerge r = merge_central(vc, wa, b);
            const Mat rhs = cz * oracle::kron2(oracle::eye(2), wa) * oracle::dsum(oracle::eye(dim), b) *
                            oracle::kron2(oracle::eye(2), vc) * cz;
            EXPECT_LT(oracle::max_diff(oracle::dsum(r.first, r.second), rhs), 1e-10);
        }
    }
    EXPECT_THROW(merge_central(oracle::eye(2), oracle::eye(2), oracle::eye(2)), PreconditionError);
}

TEST(AssembleNode, BasicFragmentReconstructs) {
    for (int n : {2, 3, 4}) {
        for (std::uint64_t s = 0; s < 25; ++s) {
            const Mat u = haar_random_unitary(Eigen::Index{1} << n, 600 + s);
            const Circuit frag = assemble_node_basic(u);
            EXPECT_LT(oracle::max_diff(circuit_to_unitary(frag), u), 1e-9);
            EXPECT_EQ(count_kind(frag, GateKind::CNOT), 3 * (std::int64_t{1} << (n - 1)));
            EXPECT_EQ(count_kind(frag, GateKind::H), 2);
            EXPECT_EQ(count_kind(frag, n == 2 ? GateKind::Generic1Q : GateKind::GenericBlock), 4);
        }
    }
}

TEST(AssembleNode, MergedFragmentReconstructs) {
    for (int n : {3, 4}) {
        for (std::uint64_t s = 0; s < 25; ++s) {
            const Mat u = haar_random_unitary(Eigen::Index{1} << n, 700 + s);
            const Circuit frag = assemble_node_merged(u);
            EXPECT_LT(oracle::max_diff(circuit_to_unitary(frag), u), 1e-9);
            EXPECT_EQ(count_kind(frag, GateKind::CNOT), 3 * (std::int64_t{1} << (n - 1)) - 2);
            EXPECT_EQ(count_kind(frag, GateKind::GenericBlock), 4);
        }
    }
    EXPECT_THROW(assemble_node_merged(haar_random_unitary(4, 1)), PreconditionError);
}

TEST(AssembleNode, BlockDiagonalInputHasSameStructure) {
    oracle::Rng rng(53);
    const Mat u = oracle::dsum(rng.unitary(4), rng.unitary(4));
    const Circuit frag = assemble_node_merged(u);
    EXPECT_LT(oracle::max_diff(circuit_to_unitary(frag), u), 1e-9);
    EXPECT_EQ(count_kind(frag, GateKind::CNOT), 10);
}

TEST(CommutationPredicate, AgreesWithMatrices) {
    oracle::Rng rng(54);
    const int n = 4;
    std::vector<Gate> gates{Gate::h(0), Gate::h(2), Gate::rz(3, 0.4), Gate::ry(1, 0.2), Gate::ry(3, 0.2),
                            Gate::cnot(3, 0), Gate::cnot(0, 3), Gate::cnot(2, 3), Gate::cz(1, 3),
                            Gate::z(2), Gate::rx(2, 0.3), Gate::generic_1q(0, rng.unitary(2)),
                            Gate::generic_block({2, 3}, rng.unitary(4)), Gate::global_phase(cplx(0, 1))};
    for (const Gate& g : gates) {
        const Mat d = low_diagonal(rng, n);
        const Mat m = gate_matrix(g, n);
        const bool commutes = oracle::max_diff(m * d, d * m) < 1e-12;
        if (commutes_with_low_diagonal(g, n)) EXPECT_TRUE(commutes) << to_string(g.kind);
        if (!commutes) EXPECT_FALSE(commutes_with_low_diagonal(g, n)) << to_string(g.kind);
    }
}

TEST(CommutationPredicate, HoldsBetweenLeavesOfExpandedCircuits) {
    oracle::Rng rng(55);
    for (int n : {3, 4}) {
        SynthesisConfig cfg;
        const Circuit ir = expand_to_leaves(haar_random_unitary(Eigen::Index{1} << n, 800 + n), cfg);
        EXPECT_EQ(count_kind(ir, GateKind::GenericBlock), std::int64_t{1} << (2 * (n - 2)));
        const auto& gs = ir.gates();
        bool seen_leaf = false;
        for (const Gate& g : gs) {
            if (g.kind == GateKind::GenericBlock) {
                EXPECT_EQ(g.qubits, (std::vector<int>{n - 2, n - 1}));
                seen_leaf = true;
                continue;
            }
            if (!seen_leaf) continue;
            EXPECT_TRUE(commutes_with_low_diagonal(g, n)) << to_string(g.kind);
            const Mat d = low_diagonal(rng, n);
            const Mat m = gate_matrix(g, n);
            EXPECT_LT(oracle::max_diff(m * d, d * m), 1e-12);
        }
    }
}

TEST(MigrateDiagonals, SavesOneCnotPerLeafAfterTheFirst) {
    for (int n : {3, 4}) {
        SynthesisConfig cfg;
        cfg.level = OptLevel::L3;
        const Mat u = haar_random_unitary(Eigen::Index{1} << n, 900 + n);
        const Circuit ir = expand_to_leaves(u, cfg);
        const Circuit plain = lower_leaves(ir);
        const Circuit migrated = migrate_diagonals(ir);
        const std::int64_t leaves = std::int64_t{1} << (2 * (n - 2));
        EXPECT_EQ(cnot_count(plain) - cnot_count(migrated), leaves - 1);
        EXPECT_LT(distance_up_to_phase(circuit_to_unitary(migrated), u), 1e-9);
        EXPECT_LT(oracle::max_diff(circuit_to_unitary(migrated), u), 1e-9);
    }
}

TEST(MigrateDiagonals, ThreeQubitTotal) {
    SynthesisConfig cfg;
    const Circuit ir = expand_to_leaves(haar_random_unitary(8, 17), cfg);
    EXPECT_EQ(cnot_count(lower_leaves(ir)), 22);
    EXPECT_EQ(cnot_count(migrate_diagonals(ir)), 19);
}

TEST(MigrateDiagonals, IdentityInputStillSaves) {
    SynthesisConfig cfg;
    const Circuit ir = expand_to_leaves(oracle::eye(16), cfg);
    const Circuit out = migrate_diagonals(ir);
    EXPECT_EQ(cnot_count(out), 95);
    EXPECT_LT(distance_up_to_phase(circuit_to_unitary(out), oracle::eye(16)), 1e-10);
}

TEST(MigrateDiagonals, RejectsBlockingGatesAndMisplacedLeaves) {
    oracle::Rng rng(56);
    Circuit blocked(3);
    blocked.append(Gate::generic_block({1, 2}, rng.unitary(4)));
    blocked.append(Gate::h(2));
    blocked.append(Gate::generic_block({1, 2}, rng.unitary(4)));
    EXPECT_THROW(migrate_diagonals(blocked), StructuralError);

    Circuit misplaced(3);
    misplaced.append(Gate::generic_block({0, 1}, rng.unitary(4)));
    EXPECT_THROW(migrate_diagonals(misplaced), StructuralError);

    Circuit fine(3);
    fine.append(Gate::generic_block({1, 2}, rng.unitary(4)));
    fine.append(Gate::cnot(2, 0)).append(Gate::h(0)).append(Gate::cz(0, 1));
    fine.append(Gate::generic_block({1, 2}, rng.unitary(4)));
    const Circuit out = migrate_diagonals(fine);
    EXPECT_EQ(cnot_count(out), 3 + 2 + 2);
    Circuit ref = fine;
    EXPECT_LT(oracle::max_diff(circuit_to_unitary(out), circuit_to_unitary(ref)), 1e-10);
}

TEST(ExpectedCount, TableValues) {
    const std::vector<std::int64_t> l3{0, 3, 19, 95, 423, 1783};
    const std::vector<std::int64_t> l0{0, 6, 36, 168, 720, 2976};
    const std::vector<std::int64_t> lb{0, 3, 14, 61, 252, 1020};
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(expected_count(n, OptLevel::L3), l3[static_cast<std::size_t>(n - 1)]);
        EXPECT_EQ(expected_count(n, OptLevel::L0), l0[static_cast<std::size_t>(n - 1)]);
        EXPECT_EQ(lower_bound_count(n), lb[static_cast<std::size_t>(n - 1)]);
    }
    EXPECT_EQ(expected_count(3, OptLevel::L2), 22);
}

TEST(ExpectedCount, MatchesClosedForms) {
    for (int n = 2; n <= 28; ++n) {
        const std::int64_t p4 = oracle::pow2(2 * n), p2 = oracle::pow2(n);
        EXPECT_EQ((22 * p4 - 72 * p2 + 80) % 48, 0);
        EXPECT_EQ((9 * p4 - 24 * p2) % 16, 0);
        EXPECT_EQ(expected_count(n, OptLevel::L0), oracle::closed_l0(n));
        EXPECT_EQ(expected_count(n, OptLevel::L1), oracle::closed_l1(n));
        EXPECT_EQ(expected_count(n, OptLevel::L2), oracle::closed_l2(n));
        EXPECT_EQ(expected_count(n, OptLevel::L3), oracle::closed_l3(n));
        EXPECT_EQ(expected_count(n, OptLevel::L1) - expected_count(n, OptLevel::L3),
                  2 * (oracle::pow2(2 * n - 4) - 1) / 3 + oracle::pow2(2 * n - 4) - 1);
    }
    for (OptLevel l : {OptLevel::L0, OptLevel::L1, OptLevel::L2, OptLevel::L3}) EXPECT_EQ(expected_count(1, l), 0);
    EXPECT_THROW(expected_count(0, OptLevel::L3), PreconditionError);
    EXPECT_THROW(expected_count(29, OptLevel::L3), ResourceError);
}

TEST(OptLevel, IntConversion) {
    for (int i = 0; i < 4; ++i) EXPECT_EQ(to_int(opt_level_from_int(i)), i);
    EXPECT_EQ(to_string(OptLevel::L2), "L2");
    EXPECT_THROW(opt_level_from_int(4), PreconditionError);
}

}  // namespace
