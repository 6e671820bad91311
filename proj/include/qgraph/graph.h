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

#ifndef QGRAPH_GRAPH_H
#define QGRAPH_GRAPH_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qgraph {

using Complex = std::complex<double>;
using Vertex = std::uint32_t;

/// Weights (or weight components) with modulus below this are dropped.
inline constexpr double kPruneTol = 1e-12;
/// Default tolerance for comparing density matrices.
inline constexpr double kCompareTol = 1e-10;
/// Largest supported qubit count for sparse graphs.
inline constexpr int kMaxQubits = 24;
/// Largest qubit count for which dense 2^n x 2^n matrices are materialized.
inline constexpr int kDefaultDenseCap = 10;

enum class Admissibility {
    /// Real edge weights and nonnegative loop weights.
    RealNonnegative,
    /// Complex Hermitian edge weights and/or negative loops.
    HermitianExtended,
};

/// Undirected edge u < v. The weight is the (u, v) entry of the adjacency
/// matrix; the (v, u) entry is its conjugate.
struct Edge {
    Vertex u;
    Vertex v;
    Complex w;

    bool operator==(const Edge &other) const = default;
};

struct Loop {
    Vertex v;
    double weight;

    bool operator==(const Loop &other) const = default;
};

class QGraph;

namespace detail {
/// Wraps edge and loop lists that are already sorted, merged and pruned.
QGraph assume_canonical(int n_qubits, std::vector<Edge> edges, std::vector<Loop> loops);
}  // namespace detail

/// Sparse weighted graph on 2^n vertices whose signless Laplacian, scaled to
/// unit trace, is an n-qubit density matrix.
///
/// Values are immutable: every modifying operation returns a new graph.
/// Edges are kept sorted by (u, v) and loops by v, so iteration order is
/// canonical.
class QGraph {
   public:
    /// Empty graph (no edges, no loops) on 2^n_qubits vertices.
    explicit QGraph(int n_qubits);

    int n_qubits() const noexcept {
        return n_qubits_;
    }
    std::size_t order() const noexcept {
        return std::size_t{1} << n_qubits_;
    }
    std::span<const Edge> edges() const noexcept {
        return edges_;
    }
    std::span<const Loop> loops() const noexcept {
        return loops_;
    }
    std::size_t num_edges() const noexcept {
        return edges_.size();
    }
    std::size_t num_loops() const noexcept {
        return loops_.size();
    }
    bool empty() const noexcept {
        return edges_.empty() && loops_.empty();
    }
    Admissibility admissibility() const noexcept {
        return admissibility_;
    }
    bool has_negative_loops() const noexcept;

    /// A(u, v) for u != v, honoring orientation (conjugated when u > v).
    Complex edge_weight(Vertex u, Vertex v) const;
    double loop_weight(Vertex v) const;

    /// Sum of |w| over incident edges plus |loop|.
    double degree(Vertex v) const;

    /// tr L(G) = 2 sum |w| + 2 sum loop, computed without materializing L.
    double laplacian_trace() const noexcept;

    bool operator==(const QGraph &other) const;

   private:
    friend class GraphBuilder;
    friend QGraph detail::assume_canonical(int, std::vector<Edge>, std::vector<Loop>);
    QGraph(int n_qubits, std::vector<Edge> edges, std::vector<Loop> loops);

    int n_qubits_;
    std::vector<Edge> edges_;
    std::vector<Loop> loops_;
    Admissibility admissibility_ = Admissibility::RealNonnegative;
};

/// Collects edge and loop weights and produces a canonical QGraph.
///
/// Contributions that land on the same edge or loop are summed before
/// pruning; an edge given as (u, v) with u > v is stored conjugated as (v, u).
class GraphBuilder {
   public:
    explicit GraphBuilder(int n_qubits);

    int n_qubits() const noexcept {
        return n_qubits_;
    }

    void reserve(std::size_t edges, std::size_t loops = 0);
    GraphBuilder &add_edge(Vertex u, Vertex v, Complex w);
    GraphBuilder &add_loop(Vertex v, double weight);

    QGraph build() &&;

   private:
    int n_qubits_;
    std::vector<Edge> edges_;
    std::vector<Loop> loops_;
};

QGraph empty_graph(int n_qubits);

/// Returns G with edge {u, v} replaced by weight w (A(u, v) = w). A weight of
/// modulus below kPruneTol removes the edge.
QGraph set_edge(const QGraph &g, Vertex u, Vertex v, Complex w);

/// Returns G with the loop at v replaced by `weight`; a zero weight removes it.
QGraph set_loop(const QGraph &g, Vertex v, double weight);

double degree(const QGraph &g, Vertex v);

/// Zeroes real or imaginary parts below kPruneTol.
Complex snap_weight(Complex w);

namespace detail {

void check_order(int n_qubits);
void check_vertex(const QGraph &g, Vertex v);
void check_same_order(const QGraph &a, const QGraph &b);

inline std::uint64_t edge_key(Vertex u, Vertex v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace detail

}  // namespace qgraph

#endif
