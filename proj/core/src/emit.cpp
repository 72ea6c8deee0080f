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

#include "blockzxz/emit.hpp"

#include <cstdio>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "blockzxz/errors.hpp"

namespace bzxz {

namespace {

using json = nlohmann::ordered_json;

json complex_pair(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw StructuralError("expected [re, im] pair");
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json gate_to_json(const Gate& g) {
    json out;
    out["kind"] = std::string(to_string(g.kind));
    out["qubits"] = g.qubits;
    switch (g.kind) {
        case GateKind::Generic1Q:
        case GateKind::GenericBlock:
        case GateKind::Multiplexor: {
            json entries = json::array();
            for (Eigen::Index i = 0; i < g.matrix.rows(); ++i) {
                for (Eigen::Index j = 0; j < g.matrix.cols(); ++j) {
                    entries.push_back(complex_pair(g.matrix(i, j)));
                }
            }
            out["matrix"] = std::move(entries);
            break;
        }
        case GateKind::Diagonal: {
            json entries = json::array();
            for (Eigen::Index i = 0; i < g.diagonal.size(); ++i) {
                entries.push_back(complex_pair(g.diagonal(i)));
            }
            out["matrix"] = std::move(entries);
            break;
        }
        case GateKind::GlobalPhase:
            out["params"] = json::array({g.phase.real(), g.phase.imag()});
            break;
        default:
            out["params"] = g.angles;
            break;
    }
    return out;
}

Gate gate_from_json(const json& j) {
    Gate g;
    g.kind = gate_kind_from_string(j.at("kind").get<std::string>());
    g.qubits = j.at("qubits").get<std::vector<int>>();
    switch (g.kind) {
        case GateKind::Generic1Q:
        case GateKind::GenericBlock:
        case GateKind::Multiplexor: {
            const auto& entries = j.at("matrix");
            const auto dim = Eigen::Index{1} << g.qubits.size();
            if (static_cast<Eigen::Index>(entries.size()) != dim * dim) {
                throw StructuralError("gate matrix has the wrong number of entries");
            }
            g.matrix.resize(dim, dim);
            for (Eigen::Index i = 0; i < dim; ++i) {
                for (Eigen::Index c = 0; c < dim; ++c) {
                    g.matrix(i, c) = complex_from(entries.at(static_cast<std::size_t>(i * dim + c)));
                }
            }
            break;
        }
        case GateKind::Diagonal: {
            const auto& entries = j.at("matrix");
            g.diagonal.resize(static_cast<Eigen::Index>(entries.size()));
            for (std::size_t i = 0; i < entries.size(); ++i) {
                g.diagonal(static_cast<Eigen::Index>(i)) = complex_from(entries[i]);
            }
            break;
        }
        case GateKind::GlobalPhase:
            g.phase = complex_from(j.at("params"));
            break;
        default:
            g.angles = j.at("params").get<std::vector<double>>();
            break;
    }
    return g;
}

std::string qubit_ref(int q) { return "q[" + std::to_string(q) + "]"; }

}  // namespace

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string emit(const Circuit& c, EmitFormat format) {
    if (format == EmitFormat::Json) {
        json out;
        out["n"] = c.num_qubits();
        out["global_phase"] = complex_pair(c.global_phase());
        json gates = json::array();
        for (const Gate& g : c.gates()) gates.push_back(gate_to_json(g));
        out["gates"] = std::move(gates);
        return out.dump() + "\n";
    }

    std::ostringstream os;
    os << "OPENQASM 3.0;\n";
    os << "include \"stdgates.inc\";\n";
    os << "qubit[" << c.num_qubits() << "] q;\n";
    if (c.global_phase() != cplx(1.0, 0.0)) {
        os << "gphase(" << format_double(std::arg(c.global_phase())) << ");\n";
    }
    for (const Gate& g : c.gates()) {
        switch (g.kind) {
            case GateKind::H:
                os << "h " << qubit_ref(g.qubits[0]) << ";\n";
                break;
            case GateKind::Z:
                os << "z " << qubit_ref(g.qubits[0]) << ";\n";
                break;
            case GateKind::RX:
                os << "rx(" << format_double(-g.angles[0]) << ") " << qubit_ref(g.qubits[0]) << ";\n";
                break;
            case GateKind::RY:
                os << "ry(" << format_double(-g.angles[0]) << ") " << qubit_ref(g.qubits[0]) << ";\n";
                break;
            case GateKind::RZ:
                os << "rz(" << format_double(g.angles[0]) << ") " << qubit_ref(g.qubits[0]) << ";\n";
                break;
            case GateKind::CNOT:
                os << "cx " << qubit_ref(g.qubits[0]) << ", " << qubit_ref(g.qubits[1]) << ";\n";
                break;
            case GateKind::CZ:
                os << "cz " << qubit_ref(g.qubits[0]) << ", " << qubit_ref(g.qubits[1]) << ";\n";
                break;
            case GateKind::GlobalPhase:
                os << "gphase(" << format_double(std::arg(g.phase)) << ");\n";
                break;
            default:
                throw LoweringError("QASM emission: " + std::string(to_string(g.kind)) +
                                    " must be lowered first");
        }
    }
    return os.str();
}

Circuit parse_circuit_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw StructuralError(std::string("circuit JSON: ") + e.what());
    }
    try {
        Circuit c(j.at("n").get<int>());
        for (const auto& g : j.at("gates")) c.append(gate_from_json(g));
        c.set_global_phase(complex_from(j.at("global_phase")));
        return c;
    } catch (const json::exception& e) {
        throw StructuralError(std::string("circuit JSON: ") + e.what());
    }
}

Circuit parse_qasm_subset(std::string_view text) {
    static const std::regex header(R"(^\s*OPENQASM\s+3(\.0)?\s*;\s*$)");
    static const std::regex include(R"(^\s*include\s+"[^"]*"\s*;\s*$)");
    static const std::regex reg(R"(^\s*qubit\s*\[\s*(\d+)\s*\]\s*q\s*;\s*$)");
    static const std::regex gphase(R"(^\s*gphase\s*\(\s*([^)]+)\)\s*;\s*$)");
    static const std::regex one(R"(^\s*(h|z)\s+q\[(\d+)\]\s*;\s*$)");
    static const std::regex rot(R"(^\s*(rx|ry|rz)\s*\(\s*([^)]+)\)\s*q\[(\d+)\]\s*;\s*$)");
    static const std::regex two(R"(^\s*(cx|cz)\s+q\[(\d+)\]\s*,\s*q\[(\d+)\]\s*;\s*$)");

    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<Circuit> c;
    bool saw_header = false;
    cplx phase{1.0, 0.0};
    std::smatch m;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (std::regex_match(line, header)) {
            saw_header = true;
        } else if (std::regex_match(line, include)) {
            continue;
        } else if (std::regex_match(line, m, reg)) {
            c.emplace(std::stoi(m[1]));
        } else if (!c) {
            throw StructuralError("QASM: gate before qubit declaration: " + line);
        } else if (std::regex_match(line, m, gphase)) {
            phase *= std::polar(1.0, std::stod(m[1]));
        } else if (std::regex_match(line, m, one)) {
            const int q = std::stoi(m[2]);
            c->append(m[1] == "h" ? Gate::h(q) : Gate::z(q));
        } else if (std::regex_match(line, m, rot)) {
            const double theta = std::stod(m[2]);
            const int q = std::stoi(m[3]);
            if (m[1] == "rz") c->append(Gate::rz(q, theta));
            else if (m[1] == "ry") c->append(Gate::ry(q, -theta));
            else c->append(Gate::rx(q, -theta));
        } else if (std::regex_match(line, m, two)) {
            const int a = std::stoi(m[2]);
            const int b = std::stoi(m[3]);
            c->append(m[1] == "cx" ? Gate::cnot(a, b) : Gate::cz(a, b));
        } else {
            throw StructuralError("QASM: unsupported line: " + line);
        }
    }
    if (!saw_header || !c) throw StructuralError("QASM: missing header or qubit declaration");
    c->set_global_phase(phase);
    return *c;
}

}  // namespace bzxz
