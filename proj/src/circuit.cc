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

#include "qgraph/circuit.h"

#include <string>

#include "qgraph/error.h"
#include "qgraph/switching.h"

namespace qgraph {

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
    detail::check_order(n_qubits);
}

Circuit::Circuit(int n_qubits, std::vector<GateOp> ops) : Circuit(n_qubits) {
    for (GateOp &op : ops) {
        append(std::move(op));
    }
}

Circuit &Circuit::append(GateOp op) {
    validate_op(op, n_qubits_);
    ops_.push_back(std::move(op));
    return *this;
}

QGraph basis_state_graph(int n_qubits, std::string_view bits) {
    detail::check_order(n_qubits);
    if (bits.size() != static_cast<std::size_t>(n_qubits)) {
        throw Error(ErrorCode::LengthMismatch, "bit string '" + std::string(bits) + "' does not have " +
                                                   std::to_string(n_qubits) + " characters");
    }
    Vertex v = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw Error(ErrorCode::ParseError, "bit string '" + std::string(bits) + "' contains '" + c + "'");
        }
        v = (v << 1) | static_cast<Vertex>(c - '0');
    }
    return set_loop(empty_graph(n_qubits), v, 0.5);
}

QGraph apply_op(const QGraph &g, const GateOp &op) {
    validate_op(op, g.n_qubits());
    if (const auto *one = std::get_if<OneQubitOp>(&op)) {
        if (one->gate.is_pauli()) {
            return fast_switch_pauli(g, one->position, one->gate);
        }
        return switch_at(g, one->position, one->gate);
    }
    return switch_cnot(g);
}

std::vector<QGraph> run(const QGraph &g, const Circuit &c) {
    detail::check_same_order(g, QGraph(c.n_qubits()));
    std::vector<QGraph> out;
    out.reserve(c.ops().size() + 1);
    out.push_back(g);
    for (const GateOp &op : c.ops()) {
        out.push_back(apply_op(out.back(), op));
    }
    return out;
}

std::vector<TraceStep> run_traced(const QGraph &g, const Circuit &c, bool expand_chains) {
    detail::check_same_order(g, QGraph(c.n_qubits()));
    std::vector<TraceStep> out;
    out.push_back({"input", g});
    for (const GateOp &op : c.ops()) {
        const QGraph &current = out.back().graph;
        std::string name = op_name(op);
        const auto *one = std::get_if<OneQubitOp>(&op);
        if (expand_chains && one != nullptr && !one->gate.is_pauli() && one->position != g.n_qubits()) {
            SwitchTrace t = switch_at_traced(current, one->position, one->gate);
            out.push_back({name + ":relabel", std::move(t.relabeled)});
            out.push_back({name + ":switch-last", std::move(t.switched)});
            out.push_back({name, std::move(t.result)});
        } else {
            out.push_back({name, apply_op(current, op)});
        }
    }
    return out;
}

std::vector<QGraph> bell_demo(std::string_view which) {
    Circuit c(2, {gate_at(OneQubitGate::h(), 1), cnot_last_pair()});
    return run(basis_state_graph(2, which), c);
}

}  // namespace qgraph
