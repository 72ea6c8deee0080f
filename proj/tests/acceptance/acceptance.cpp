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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <blockzxz/circuit.hpp>
#include <blockzxz/optimizer.hpp>
#include <blockzxz/smallgate.hpp>
#include <blockzxz/synthesis.hpp>
#include <blockzxz/ucr.hpp>
#include <blockzxz/zxz.hpp>

#include "oracles.hpp"

#ifndef BZXZ_EXE
#error "BZXZ_EXE must point at the bzxz executable"
#endif
#ifndef BZXZ_TMP
#define BZXZ_TMP "/tmp"
#endif

namespace {

using namespace bzxz;
using oracle::Mat;
using Clock = std::chrono::steady_clock;

constexpr OptLevel kLevels[] = {OptLevel::L0, OptLevel::L1, OptLevel::L2, OptLevel::L3};

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << what;
            pass = false;
        }
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

SynthesisConfig at(OptLevel level) {
    SynthesisConfig cfg;
    cfg.level = level;
    return cfg;
}

// 1. measured counts at L3 and L0 for n = 2..6, exact; under 60 s.
void criterion_counts(Outcome& o) {
    const auto t0 = Clock::now();
    const std::array<std::int64_t, 5> l3{3, 19, 95, 423, 1783};
    const std::array<std::int64_t, 5> l0{6, 36, 168, 720, 2976};
    for (int n = 2; n <= 6; ++n) {
        const Mat u = haar_random_unitary(Eigen::Index{1} << n, 1000 + static_cast<std::uint64_t>(n));
        const auto i = static_cast<std::size_t>(n - 2);
        const std::int64_t c3 = cnot_count(synthesize(u, at(OptLevel::L3)));
        const std::int64_t c0 = cnot_count(synthesize(u, at(OptLevel::L0)));
        o.require(c3 == l3[i], "L3 n=" + std::to_string(n) + " gave " + std::to_string(c3));
        o.require(c0 == l0[i], "L0 n=" + std::to_string(n) + " gave " + std::to_string(c0));
    }
    const double secs = seconds_since(t0);
    o.require(secs < 60.0, "took " + std::to_string(secs) + " s");
    o.detail << (o.pass ? "" : "; ") << "runtime " << secs << " s";
}

// 2. closed form is an integer and equals measured counts for n = 2..8.
void criterion_closed_form(Outcome& o) {
    for (int n = 2; n <= 8; ++n) {
        const std::int64_t num = 22 * oracle::pow2(2 * n) - 72 * oracle::pow2(n) + 80;
        o.require(num % 48 == 0, "closed form not an integer at n=" + std::to_string(n));
        const std::int64_t closed = num / 48;
        o.require(expected_count(n, OptLevel::L3) == closed, "expected_count differs at n=" + std::to_string(n));
        SynthesisConfig cfg = at(OptLevel::L3);
        if (n >= 7) cfg.verify_each_node = false;
        const Mat u = haar_random_unitary(Eigen::Index{1} << n, 2000 + static_cast<std::uint64_t>(n));
        const std::int64_t measured = cnot_count(synthesize(u, cfg));
        o.require(measured == closed, "measured " + std::to_string(measured) + " at n=" + std::to_string(n));
    }
}

// 3. end-to-end distance for every level: 20 inputs at n = 1..5 (<= 1e-8),
//    3 at n = 6 (<= 1e-7, < 30 s each).
void criterion_end_to_end(Outcome& o) {
    double worst_small = 0.0, worst_six = 0.0, slowest_six = 0.0;
    for (OptLevel level : kLevels) {
        for (int n = 1; n <= 6; ++n) {
            const int trials = n == 6 ? 3 : 20;
            for (int t = 0; t < trials; ++t) {
                const std::uint64_t seed = 10000 * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(t);
                const Mat u = haar_random_unitary(Eigen::Index{1} << n, seed);
                const auto t0 = Clock::now();
                SynthesisConfig cfg = at(level);
                cfg.tol.verify = n == 6 ? 1e-7 : 1e-8;
                const Circuit c = synthesize(u, cfg);
                const double d = distance_up_to_phase(u, circuit_to_unitary(c));
                const double secs = seconds_since(t0);
                if (n == 6) {
                    worst_six = std::max(worst_six, d);
                    slowest_six = std::max(slowest_six, secs);
                    o.require(secs < 30.0, "n=6 instance took " + std::to_string(secs) + " s");
                } else {
                    worst_small = std::max(worst_small, d);
                }
            }
        }
    }
    o.require(worst_small <= 1e-8, "n<=5 distance " + std::to_string(worst_small));
    o.require(worst_six <= 1e-7, "n=6 distance " + std::to_string(worst_six));
    o.detail << (o.pass ? "" : "; ") << "max distance n<=5 " << worst_small << ", n=6 " << worst_six
             << ", slowest n=6 " << slowest_six << " s";
}

// 4. block-ZXZ factors: product residual <= 1e-9, factors unitary <= 1e-8.
void criterion_zxz(Outcome& o) {
    double worst = 0.0, worst_u = 0.0;
    for (int dim : {4, 8, 16}) {
        for (std::uint64_t s = 0; s < 100; ++s) {
            const Mat u = haar_random_unitary(dim, 30000 + 100 * static_cast<std::uint64_t>(dim) + s);
            const BlockZXZFactors f = compute_zxz_factors(u);
            worst = std::max(worst, oracle::max_diff(oracle::zxz_chain(f.A1, f.A2, f.B, f.C), u));
            for (const Mat* m : {&f.A1, &f.A2, &f.B, &f.C}) worst_u = std::max(worst_u, oracle::unitarity(*m));
        }
    }
    o.require(worst <= 1e-9, "product residual " + std::to_string(worst));
    o.require(worst_u <= 1e-8, "unitarity " + std::to_string(worst_u));
    o.detail << (o.pass ? "" : "; ") << "residual " << worst << ", unitarity " << worst_u;
}

// 5. demultiplex: both block equalities <= 1e-9 for dims 2, 4, 8.
void criterion_demux(Outcome& o) {
    oracle::Rng rng(5);
    double worst = 0.0;
    for (int dim : {2, 4, 8}) {
        for (int t = 0; t < 100; ++t) {
            const Mat u1 = rng.unitary(dim), u2 = rng.unitary(dim);
            const DemuxFactors d = demultiplex(u1, u2);
            worst = std::max(worst, oracle::max_diff(d.V * d.d.asDiagonal() * d.W, u1));
            worst = std::max(worst, oracle::max_diff(d.V * d.d.conjugate().asDiagonal() * d.W, u2));
        }
    }
    o.require(worst <= 1e-9, "residual " + std::to_string(worst));
    o.detail << (o.pass ? "" : "; ") << "residual " << worst;
}

// 6. multiplexed Rz: D (+) D^dagger <= 1e-10, 2^k CNOTs, mirror order equal
//    <= 1e-12 for k = 1..5; M M^T = 2^k I exactly for k <= 6.
void criterion_ucrz(Outcome& o) {
    oracle::Rng rng(6);
    double worst = 0.0, worst_rev = 0.0;
    for (int k = 1; k <= 5; ++k) {
        for (int t = 0; t < 50; ++t) {
            const auto a = rng.angles(std::size_t{1} << k);
            Eigen::VectorXcd d(static_cast<Eigen::Index>(a.size()));
            for (std::size_t j = 0; j < a.size(); ++j) d(static_cast<Eigen::Index>(j)) = std::polar(1.0, -a[j] / 2);
            const Mat target = oracle::dsum(oracle::diag_of(d), oracle::diag_of(d.conjugate()));
            const Circuit s = synthesize_ucrz({0, a}, UcrzVariant::Standard, TerminalCnot::Keep);
            const Circuit r = synthesize_ucrz({0, a}, UcrzVariant::Reversed, TerminalCnot::Keep);
            const Mat ms = circuit_to_unitary(s);
            worst = std::max(worst, oracle::max_diff(ms, target));
            worst_rev = std::max(worst_rev, oracle::max_diff(circuit_to_unitary(r), ms));
            o.require(cnot_count(s) == (1 << k), "CNOT count at k=" + std::to_string(k));
        }
    }
    for (int k = 1; k <= 6; ++k) {
        const Eigen::MatrixXi m = mk_matrix(k);
        o.require(m * m.transpose() == (1 << k) * Eigen::MatrixXi::Identity(1 << k, 1 << k),
                  "M M^T at k=" + std::to_string(k));
    }
    o.require(worst <= 1e-10, "circuit residual " + std::to_string(worst));
    o.require(worst_rev <= 1e-12, "mirror residual " + std::to_string(worst_rev));
    o.detail << (o.pass ? "" : "; ") << "residual " << worst << ", mirror " << worst_rev;
}

// 7. central merge block identity <= 1e-10 (100 triples at dim 4, 25 at dim 8).
void criterion_merge(Outcome& o) {
    oracle::Rng rng(7);
    double worst = 0.0;
    for (auto [dim, trials] : {std::pair{4, 100}, std::pair{8, 25}}) {
        const int m = log2_exact(dim) + 1;
        const Mat cz = oracle::controlled(oracle::pauli_z(), 0, 1, m);
        for (int t = 0; t < trials; ++t) {
            const Mat vc = rng.unitary(dim), wa = rng.unitary(dim), b = rng.unitary(dim);
            const CentralMerge r = merge_central(vc, wa, b);
            const Mat rhs = cz * oracle::kron2(oracle::eye(2), wa) * oracle::dsum(oracle::eye(dim), b) *
                            oracle::kron2(oracle::eye(2), vc) * cz;
            worst = std::max(worst, oracle::max_diff(oracle::dsum(r.first, r.second), rhs));
        }
    }
    o.require(worst <= 1e-10, "residual " + std::to_string(worst));
    o.detail << (o.pass ? "" : "; ") << "residual " << worst;
}

// 8. zyz <= 1e-12 (500); kak3 3 CNOTs <= 1e-10 (1000); kak2 2 CNOTs,
//    unit-modulus residual, <= 1e-10 (1000).
void criterion_small_gates(Outcome& o) {
    double wz = 0.0, w3 = 0.0, w2 = 0.0, wmod = 0.0;
    for (std::uint64_t s = 0; s < 500; ++s) {
        const Mat u = haar_random_unitary(2, 40000 + s);
        const ZYZAngles z = zyz(u);
        const Mat m = std::polar(1.0, z.phi) * oracle::rz(z.alpha) * oracle::ry(z.beta) * oracle::rz(z.gamma);
        wz = std::max(wz, oracle::max_diff(m, u));
    }
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const Mat u = haar_random_unitary(4, 50000 + s);
        const TwoQubitSynth a = kak3(u);
        o.require(cnot_count(a.circuit) == 3, "kak3 CNOT count");
        w3 = std::max(w3, oracle::max_diff(oracle::circuit_matrix(a.circuit), u));
        const TwoQubitSynth b = kak2_up_to_diagonal(u);
        o.require(cnot_count(b.circuit) == 2, "kak2 CNOT count");
        o.require(b.residual_diagonal.has_value(), "kak2 residual missing");
        wmod = std::max(wmod, (b.residual_diagonal->cwiseAbs() - Eigen::Vector4d::Ones()).cwiseAbs().maxCoeff());
        w2 = std::max(w2, oracle::max_diff(oracle::circuit_matrix(b.circuit) * oracle::diag_of(*b.residual_diagonal), u));
    }
    o.require(wz <= 1e-12, "zyz residual " + std::to_string(wz));
    o.require(w3 <= 1e-10, "kak3 residual " + std::to_string(w3));
    o.require(w2 <= 1e-10, "kak2 residual " + std::to_string(w2));
    o.require(wmod <= 1e-10, "kak2 residual modulus " + std::to_string(wmod));
    o.detail << (o.pass ? "" : "; ") << "zyz " << wz << ", kak3 " << w3 << ", kak2 " << w2;
}

// 9. [CNOT(q1 -> q0), H(q0)] equals [H(q0), CZ(q0, q1)] <= 1e-12.
void criterion_rewrite(Outcome& o) {
    Circuit lhs(2);
    lhs.append(Gate::cnot(1, 0)).append(Gate::h(0));
    Circuit rhs(2);
    rhs.append(Gate::h(0)).append(Gate::cz(0, 1));
    const double lib = oracle::max_diff(circuit_to_unitary(lhs), circuit_to_unitary(rhs));
    const double dense = oracle::max_diff(oracle::circuit_matrix(lhs), oracle::circuit_matrix(rhs));
    o.require(lib <= 1e-12 && dense <= 1e-12, "residual " + std::to_string(std::max(lib, dense)));
    o.detail << (o.pass ? "" : "; ") << "residual " << std::max(lib, dense);
}

struct Proc {
    int code;
    std::string out;
};

Proc run_tool(const std::string& args) {
    const std::string cmd = std::string("\"") + BZXZ_EXE + "\" " + args + " 2>/dev/null";
    Proc p{-1, {}};
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return p;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), f)) > 0) p.out.append(buf.data(), got);
    const int status = pclose(f);
    p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return p;
}

// 10. byte-identical seeded JSON, count table, exit codes 0 / 1 / 2.
void criterion_cli(Outcome& o) {
    const Proc a = run_tool("synth --random 3 --seed 7 --level 3 --out json");
    const Proc b = run_tool("synth --random 3 --seed 7 --level 3 --out json");
    o.require(a.code == 0 && b.code == 0, "synth exit code");
    o.require(!a.out.empty() && a.out == b.out, "seeded JSON differs between runs");

    const Proc table = run_tool("count --level 3");
    std::ostringstream want;
    for (int n = 1; n <= 8; ++n) want << n << "\t" << oracle::closed_l3(n) << "\n";
    o.require(table.code == 0 && table.out == want.str(), "count table");
    const Proc one = run_tool("count --level 3 --n 6");
    o.require(one.out == "1783\n", "count --n 6");

    const Proc verified = run_tool("synth --random 3 --seed 7 --level 3 --verify");
    o.require(verified.code == 0, "synth --verify exit code " + std::to_string(verified.code));

    const std::string dir = std::string(BZXZ_TMP);
    const std::string circ = dir + "/acc_circuit.json";
    const std::string good = dir + "/acc_good.txt";
    const std::string bad = dir + "/acc_bad.txt";
    auto write_matrix_file = [](const std::string& path, const Mat& m) {
        std::FILE* f = std::fopen(path.c_str(), "w");
        if (!f) return;
        std::fprintf(f, "%ld\n", static_cast<long>(m.rows()));
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j) std::fprintf(f, "%.17g %.17g ", m(i, j).real(), m(i, j).imag());
            std::fprintf(f, "\n");
        }
        std::fclose(f);
    };
    write_matrix_file(good, haar_random_unitary(8, 7));
    write_matrix_file(bad, haar_random_unitary(8, 8));
    const Proc s = run_tool("synth \"" + good + "\" --out json --out-file \"" + circ + "\"");
    o.require(s.code == 0, "synth from file exit code");
    o.require(run_tool("verify \"" + circ + "\" \"" + good + "\"").code == 0, "verify match exit code");
    o.require(run_tool("verify \"" + circ + "\" \"" + bad + "\"").code == 2, "verify mismatch exit code");
    o.require(run_tool("synth \"" + dir + "/does_not_exist.txt\"").code == 1, "missing file exit code");
    o.require(run_tool("synth --random 3 --frobnicate").code == 1, "unknown flag exit code");
    std::remove(circ.c_str());
    std::remove(good.c_str());
    std::remove(bad.c_str());
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"1 table counts at L3 and L0", criterion_counts},
        {"2 closed form matches measured counts n=2..8", criterion_closed_form},
        {"3 end-to-end reconstruction at every level", criterion_end_to_end},
        {"4 block-ZXZ factor oracle", criterion_zxz},
        {"5 demultiplex oracle", criterion_demux},
        {"6 multiplexed Rz oracle", criterion_ucrz},
        {"7 central merge oracle", criterion_merge},
        {"8 small-gate suites", criterion_small_gates},
        {"9 CNOT/H to H/CZ rewrite", criterion_rewrite},
        {"10 command-line contract", criterion_cli},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            fn(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        const double secs = seconds_since(t0);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << "  [" << o.detail.str() << "] ("
                  << secs << " s)" << std::endl;
        if (!o.pass) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
