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

#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <blockzxz/emit.hpp>
#include <blockzxz/errors.hpp>
#include <blockzxz/optimizer.hpp>
#include <blockzxz/report.hpp>
#include <blockzxz/synthesis.hpp>

#include "matrix_io.hpp"

namespace bzxz::cli {

namespace {

struct SynthArgs {
    std::string matrix;
    int random_n = 0;
    std::uint64_t seed = 0;
    int level = 3;
    std::string format = "qasm";
    std::string out_file;
    bool verify = false;
    std::string report;
    bool no_check = false;
};

struct VerifyArgs {
    std::string circuit;
    std::string matrix;
    double tol = 1e-8;
    bool no_check = false;
};

struct CountArgs {
    int level = 3;
    int n = 0;
};

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text, bool append) {
    std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
    if (!out) throw PreconditionError("cannot write " + path);
    out << text;
}

int run_synth(const SynthArgs& a, std::ostream& out, std::ostream& err) {
    SynthesisConfig cfg;
    cfg.level = opt_level_from_int(a.level);
    ComplexMatrix u;
    if (a.random_n > 0) {
        u = haar_random_unitary(Eigen::Index{1} << a.random_n, a.seed);
        cfg.seed = a.seed;
    } else {
        u = read_matrix_file(a.matrix, !a.no_check, cfg.tol.unitarity);
    }

    std::optional<SynthesisRun> result;
    try {
        result = synthesize_with_report(u, cfg);
    } catch (const SynthesisError& e) {
        err << "synthesis verification failed: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    const SynthesisRun& run = *result;

    const std::string text =
        emit(run.circuit, a.format == "json" ? EmitFormat::Json : EmitFormat::Qasm3Subset);
    if (a.out_file.empty()) {
        out << text;
    } else {
        write_text(a.out_file, text, false);
    }

    const std::string line = to_json(run.report) + "\n";
    if (!a.report.empty()) {
        write_text(a.report, line, true);
    } else if (a.verify) {
        err << line;
    }

    if (a.verify) {
        if (!run.report.reconstruction_distance) {
            err << "cannot verify: " << run.report.n << " qubits exceeds the simulation cap\n";
            return kExitInputError;
        }
        if (!(*run.report.reconstruction_distance <= cfg.tol.verify)) {
            err << "verification failed: distance " << format_double(*run.report.reconstruction_distance)
                << "\n";
            return kExitVerifyFailed;
        }
    }
    return kExitOk;
}

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const Circuit c = parse_circuit_json(read_text(a.circuit));
    const ComplexMatrix u = read_matrix_file(a.matrix, !a.no_check, Tolerances{}.unitarity);
    if (u.rows() != (Eigen::Index{1} << c.num_qubits())) {
        throw PreconditionError("circuit and matrix dimensions differ");
    }
    const double dist = distance_up_to_phase(u, circuit_to_unitary(c));
    out << format_double(dist) << "\n";
    if (!(dist <= a.tol)) {
        err << "verification failed: distance exceeds " << format_double(a.tol) << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

int run_count(const CountArgs& a, std::ostream& out) {
    const OptLevel level = opt_level_from_int(a.level);
    if (a.n > 0) {
        out << expected_count(a.n, level) << "\n";
        return kExitOk;
    }
    for (int n = 1; n <= 8; ++n) out << n << "\t" << expected_count(n, level) << "\n";
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Block-ZXZ unitary synthesis", "bzxz"};
    app.require_subcommand(1);

    SynthArgs sa;
    auto* synth = app.add_subcommand("synth", "Synthesize a circuit from a unitary");
    auto* matrix_opt = synth->add_option("matrix", sa.matrix, "Matrix file")->check(CLI::ExistingFile);
    auto* random_opt =
        synth->add_option("--random", sa.random_n, "Haar-random unitary on N qubits")->check(CLI::Range(1, 12));
    matrix_opt->excludes(random_opt);
    synth->add_option("--seed", sa.seed, "Seed for --random");
    synth->add_option("--level", sa.level, "Optimization level")->check(CLI::Range(0, 3));
    synth->add_option("--out", sa.format, "Output format")->check(CLI::IsMember({"qasm", "json"}));
    synth->add_option("--out-file", sa.out_file, "Write the circuit here instead of stdout");
    synth->add_flag("--verify", sa.verify, "Check the circuit against the input");
    synth->add_option("--report", sa.report, "Append a JSON report line to this file");
    synth->add_flag("--no-check", sa.no_check, "Skip the unitarity check on load");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Distance between a circuit and a matrix");
    verify->add_option("circuit", va.circuit, "Circuit JSON")->required()->check(CLI::ExistingFile);
    verify->add_option("matrix", va.matrix, "Matrix file")->required()->check(CLI::ExistingFile);
    verify->add_option("--tol", va.tol, "Accepted distance");
    verify->add_flag("--no-check", va.no_check, "Skip the unitarity check on load");

    CountArgs ca;
    auto* count = app.add_subcommand("count", "Expected CNOT counts");
    count->add_option("--level", ca.level, "Optimization level")->check(CLI::Range(0, 3));
    count->add_option("--n", ca.n, "Number of qubits")->check(CLI::Range(1, 28));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*synth) {
            if (sa.matrix.empty() && sa.random_n == 0) {
                err << "synth: give a matrix file or --random N\n";
                return kExitInputError;
            }
            return run_synth(sa, out, err);
        }
        if (*verify) return run_verify(va, out, err);
        return run_count(ca, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace bzxz::cli
