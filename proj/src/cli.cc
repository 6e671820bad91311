// Copyright 2026 The qgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgraph/cli.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qgraph/circuit.h"
#include "qgraph/error.h"
#include "qgraph/graph_io.h"
#include "qgraph/laplacian.h"
#include "qgraph/oracle.h"

namespace qgraph {

namespace {

/// Usage-level failure detected after option parsing.
struct UsageError {
    std::string message;
};

GraphFile load_graph(const std::string &path, std::istream &in) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream f(path);
        if (!f) {
            throw std::runtime_error("cannot open '" + path + "'");
        }
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    return parse_graph(text);
}

std::string format_eigenvalue(double x) {
    if (std::abs(x) < 5e-13) {
        x = 0;
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12f", x);
    return buf;
}

struct StateArgs {
    int n = 0;
    std::string bits;
    std::string bell;
};

int cmd_state(const StateArgs &a, std::ostream &out) {
    if (!a.bell.empty()) {
        if (!a.bits.empty()) {
            throw UsageError{"--bell cannot be combined with --bits"};
        }
        if (a.n != 0 && a.n != 2) {
            throw UsageError{"Bell states have two qubits"};
        }
        if (a.bell != "00" && a.bell != "01" && a.bell != "10" && a.bell != "11") {
            throw UsageError{"--bell expects one of 00, 01, 10, 11"};
        }
        out << serialize_graph(bell_demo(a.bell).back(), "bell " + a.bell);
        return kExitOk;
    }
    if (a.n < 1 || a.n > kMaxQubits) {
        throw UsageError{"--n must be in [1, " + std::to_string(kMaxQubits) + "]"};
    }
    if (a.bits.size() != static_cast<std::size_t>(a.n)) {
        throw UsageError{"--bits must have exactly --n characters"};
    }
    try {
        out << serialize_graph(basis_state_graph(a.n, a.bits), "basis " + a.bits);
    } catch (const Error &e) {
        throw UsageError{e.what()};
    }
    return kExitOk;
}

struct ApplyArgs {
    std::string input;
    std::string gates;
    bool trace = false;
    bool verbose = false;
};

std::vector<GateOp> parse_gates_or_usage(const std::string &spec) {
    try {
        return parse_gate_spec(spec);
    } catch (const Error &e) {
        throw UsageError{e.what()};
    }
}

int cmd_apply(const ApplyArgs &a, std::istream &in, std::ostream &out) {
    std::vector<GateOp> ops = parse_gates_or_usage(a.gates);
    GraphFile file = load_graph(a.input, in);
    Circuit circuit(file.graph.n_qubits(), std::move(ops));
    if (!a.trace && !a.verbose) {
        out << serialize_graph(run(file.graph, circuit).back(), file.label);
        return kExitOk;
    }
    auto steps = run_traced(file.graph, circuit, a.verbose);
    nlohmann::json arr = nlohmann::json::array();
    for (const TraceStep &s : steps) {
        arr.push_back(graph_to_json(s.graph, s.label));
    }
    out << arr.dump(2) << "\n";
    return kExitOk;
}

struct VerifyArgs {
    std::string input;
    std::string gates;
    double tol = kCompareTol;
    int max_qubits = kDefaultDenseCap;
};

int cmd_verify(const VerifyArgs &a, std::istream &in, std::ostream &out) {
    std::vector<GateOp> ops = parse_gates_or_usage(a.gates);
    GraphFile file = load_graph(a.input, in);
    const QGraph &g = file.graph;
    detail::check_dense_cap(g.n_qubits(), a.max_qubits);
    Circuit circuit(g.n_qubits(), std::move(ops));
    auto graphs = run(g, circuit);

    double worst = 0;
    DenseMatrix total = DenseMatrix::Identity(static_cast<Eigen::Index>(g.order()),
                                              static_cast<Eigen::Index>(g.order()));
    for (std::size_t i = 0; i < circuit.ops().size(); ++i) {
        const GateOp &op = circuit.ops()[i];
        Verdict v = verify_result(graphs[i], op, graphs[i + 1], a.tol, a.max_qubits);
        worst = std::max(worst, v.max_abs_deviation);
        out << "step " << i + 1 << " " << op_name(op) << ": " << (v.pass ? "PASS" : "FAIL") << " deviation "
            << format_deviation(v.max_abs_deviation) << "\n";
        total = dense_operator(op, g.n_qubits(), a.max_qubits) * total;
    }
    DensityMatrix expected = conjugate_density(density_of(g, a.max_qubits), total);
    double end_to_end = max_abs_diff(expected.matrix(), density_of(graphs.back(), a.max_qubits).matrix());
    worst = std::max(worst, end_to_end);
    out << "circuit: " << (end_to_end <= a.tol ? "PASS" : "FAIL") << " deviation " << format_deviation(end_to_end)
        << "\n";
    bool pass = worst <= a.tol;
    out << (pass ? "PASS" : "FAIL") << " max deviation " << format_deviation(worst) << " (tol "
        << format_deviation(a.tol) << ")\n";
    return pass ? kExitOk : kExitFailure;
}

int cmd_export_dot(const std::string &input, std::istream &in, std::ostream &out) {
    out << to_dot(load_graph(input, in).graph);
    return kExitOk;
}

struct SpectrumArgs {
    std::string input;
    std::string which = "l";
    int max_qubits = kDefaultDenseCap;
};

int cmd_spectrum(const SpectrumArgs &a, std::istream &in, std::ostream &out) {
    GraphFile file = load_graph(a.input, in);
    auto ev = a.which == "a" ? adjacency_spectrum(file.graph, a.max_qubits)
                             : laplacian_spectrum(file.graph, a.max_qubits);
    for (double x : ev) {
        out << format_eigenvalue(x) << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Density matrices as weighted graphs; local unitaries as graph switching.", "qgraph"};
    app.require_subcommand(1);

    StateArgs state_args;
    auto *state = app.add_subcommand("state", "Emit the graph of a basis state or a Bell state");
    state->add_option("--n", state_args.n, "Number of qubits");
    state->add_option("--bits", state_args.bits, "Basis state bits, qubit 1 first (e.g. 10)");
    state->add_option("--bell", state_args.bell, "Bell state generated from basis state 00|01|10|11");

    ApplyArgs apply_args;
    auto *apply = app.add_subcommand("apply", "Run a gate sequence on a graph file");
    apply->add_option("--in", apply_args.input, "Input graph file ('-' for stdin)")->required();
    apply->add_option("--gates", apply_args.gates, "Gate spec, e.g. H@1,CNOT,U(0.3,0,1)@2")->required();
    apply->add_flag("--trace", apply_args.trace, "Emit every intermediate graph");
    apply->add_flag("--verbose", apply_args.verbose, "Like --trace, also expanding relabel/switch chains");

    VerifyArgs verify_args;
    auto *verify = app.add_subcommand("verify", "Check a gate sequence against dense conjugation");
    verify->add_option("--in", verify_args.input, "Input graph file ('-' for stdin)")->required();
    verify->add_option("--gates", verify_args.gates, "Gate spec")->required();
    verify->add_option("--tol", verify_args.tol, "Max entrywise deviation")->capture_default_str();
    verify->add_option("--max-qubits", verify_args.max_qubits, "Dense matrix limit")->capture_default_str();

    std::string dot_input;
    auto *dot = app.add_subcommand("export-dot", "Render a graph file as DOT");
    dot->add_option("--in", dot_input, "Input graph file ('-' for stdin)")->required();

    SpectrumArgs spectrum_args;
    auto *spectrum = app.add_subcommand("spectrum", "Print adjacency (a) or signless Laplacian (l) eigenvalues");
    spectrum->add_option("--in", spectrum_args.input, "Input graph file ('-' for stdin)")->required();
    spectrum->add_option("--which", spectrum_args.which, "a or l")
        ->check(CLI::IsMember({"a", "l"}))
        ->capture_default_str();
    spectrum->add_option("--max-qubits", spectrum_args.max_qubits, "Dense matrix limit")->capture_default_str();

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*state) {
            return cmd_state(state_args, out);
        }
        if (*apply) {
            return cmd_apply(apply_args, in, out);
        }
        if (*verify) {
            return cmd_verify(verify_args, in, out);
        }
        if (*dot) {
            return cmd_export_dot(dot_input, in, out);
        }
        return cmd_spectrum(spectrum_args, in, out);
    } catch (const UsageError &e) {
        err << "error: " << e.message << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::ParseError ? kExitUsage : kExitFailure;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace qgraph
