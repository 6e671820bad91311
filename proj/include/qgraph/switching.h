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

#ifndef QGRAPH_SWITCHING_H
#define QGRAPH_SWITCHING_H

#include <array>
#include <cstddef>

#include "qgraph/graph.h"
#include "qgraph/operators.h"

namespace qgraph {

/// Modules C_j = {2j, 2j+1} (pairs differing in the last qubit) and, for
/// n >= 2, supermodules C_{2i} u C_{2i+1} = {4i, ..., 4i+3}.
class ModulePartition {
   public:
    explicit ModulePartition(int n_qubits);

    int n_qubits() const noexcept {
        return n_qubits_;
    }
    std::size_t num_modules() const noexcept {
        return std::size_t{1} << (n_qubits_ - 1);
    }
    /// Zero when n_qubits < 2.
    std::size_t num_supermodules() const noexcept {
        return n_qubits_ >= 2 ? std::size_t{1} << (n_qubits_ - 2) : 0;
    }
    static std::size_t module_of(Vertex v) noexcept {
        return v >> 1;
    }
    static std::array<Vertex, 2> module(std::size_t j) noexcept {
        auto base = static_cast<Vertex>(2 * j);
        return {base, base + 1};
    }
    /// Throws NeedsTwoQubits when n_qubits < 2.
    std::size_t supermodule_of(Vertex v) const;
    std::array<Vertex, 4> supermodule(std::size_t i) const;

   private:
    int n_qubits_;
};

/// Two-coloring of the vertices by the bit of qubit k: blue when the bit is 0,
/// red when it is 1. The i-th blue and i-th red vertex are conjugates, i.e.
/// they differ only in that bit. With k = n this pairs b_i = 2i with r_i = 2i+1.
class VertexColoring {
   public:
    VertexColoring(int n_qubits, int k);

    std::size_t size() const noexcept {
        return std::size_t{1} << (n_qubits_ - 1);
    }
    bool is_blue(Vertex v) const noexcept {
        return (v & mask_) == 0;
    }
    bool is_red(Vertex v) const noexcept {
        return !is_blue(v);
    }
    bool same_color(Vertex u, Vertex v) const noexcept {
        return ((u ^ v) & mask_) == 0;
    }
    Vertex conjugate(Vertex v) const noexcept {
        return v ^ mask_;
    }
    /// i-th blue vertex in ascending order, 0-based.
    Vertex blue(std::size_t i) const noexcept;
    Vertex red(std::size_t i) const noexcept {
        return conjugate(blue(i));
    }

   private:
    int n_qubits_;
    Vertex mask_;
};

/// G' with L(G') = U_n L(G) U_n^dagger where U_n = I (x) ... (x) I (x) U.
///
/// Every 2x2 block of L over the module partition is conjugated by U and the
/// contributions landing on the same entry are summed; the canonical graph is
/// then read off the resulting Laplacian. Runs in O(edges + loops) and never
/// builds a dense matrix. Loops may come out negative (HermitianExtended).
/// The identity gate returns G unchanged.
QGraph switch_last(const QGraph &g, const OneQubitGate &gate);

/// Intermediate graphs of the relabel / switch / relabel chain.
struct SwitchTrace {
    QGraph relabeled;
    QGraph switched;
    QGraph result;
};

/// G' with L(G') = U_k L(G) U_k^dagger, computed by relabeling with
/// bit_swap(n, k), switching the last qubit, and relabeling back.
QGraph switch_at(const QGraph &g, int k, const OneQubitGate &gate);
SwitchTrace switch_at_traced(const QGraph &g, int k, const OneQubitGate &gate);

/// X, Y and Z at qubit k as signed vertex permutations: X sends every edge
/// and loop to the conjugate vertices, Z negates edges between differently
/// colored vertices, Y does both. Throws PositionOutOfRange for a bad k and
/// UnsupportedGate for a non-Pauli gate.
QGraph fast_switch_pauli(const QGraph &g, int k, const OneQubitGate &gate);

/// CNOT on the last two qubits: swaps vertices 4i+2 and 4i+3 in every
/// supermodule, carrying edges and loops along.
QGraph switch_cnot(const QGraph &g);

/// Vertex map realized by switch_cnot.
inline Vertex cnot_vertex_map(Vertex v) noexcept {
    return v ^ ((v >> 1) & 1);
}

}  // namespace qgraph

#endif
