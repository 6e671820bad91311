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

#ifndef QGRAPH_CIRCUIT_H
#define QGRAPH_CIRCUIT_H

#include <string>
#include <string_view>
#include <vector>

#include "qgraph/graph.h"
#include "qgraph/operators.h"

namespace qgraph {

/// Ordered gate sequence on a fixed number of qubits.
class Circuit {
   public:
    explicit Circuit(int n_qubits);
    /// Throws if any op is invalid for n_qubits.
    Circuit(int n_qubits, std::vector<GateOp> ops);

    int n_qubits() const noexcept {
        return n_qubits_;
    }
    const std::vector<GateOp> &ops() const noexcept {
        return ops_;
    }
    Circuit &append(GateOp op);

   private:
    int n_qubits_;
    std::vector<GateOp> ops_;
};

/// Single loop of weight 1/2 at the vertex labeled by `bits` (first character
/// is qubit 1, the most significant bit). Throws LengthMismatch.
QGraph basis_state_graph(int n_qubits, std::string_view bits);

/// Pauli gates go through fast_switch_pauli, other one-qubit gates through
/// switch_at, and CNOT through switch_cnot.
QGraph apply_op(const QGraph &g, const GateOp &op);

/// One graph in a circuit run; `label` names the step that produced it.
struct TraceStep {
    std::string label;
    QGraph graph;
};

/// All intermediate graphs, first = input, last = output.
std::vector<QGraph> run(const QGraph &g, const Circuit &c);

/// Like run() but labeled. With `expand_chains`, each non-Pauli one-qubit
/// gate off the last qubit also contributes its relabel and switch
/// intermediates.
std::vector<TraceStep> run_traced(const QGraph &g, const Circuit &c, bool expand_chains = false);

/// [H@1, CNOT] on the basis state `which` in {"00", "01", "10", "11"}.
std::vector<QGraph> bell_demo(std::string_view which);

}  // namespace qgraph

#endif
