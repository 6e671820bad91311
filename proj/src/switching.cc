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

#include "qgraph/switching.h"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "accumulate.h"
#include "qgraph/error.h"

namespace qgraph {

ModulePartition::ModulePartition(int n_qubits) : n_qubits_(n_qubits) {
    detail::check_order(n_qubits);
}

std::size_t ModulePartition::supermodule_of(Vertex v) const {
    if (n_qubits_ < 2) {
        throw Error(ErrorCode::NeedsTwoQubits, "supermodules need at least two qubits");
    }
    return v >> 2;
}

std::array<Vertex, 4> ModulePartition::supermodule(std::size_t i) const {
    if (n_qubits_ < 2) {
        throw Error(ErrorCode::NeedsTwoQubits, "supermodules need at least two qubits");
    }
    auto base = static_cast<Vertex>(4 * i);
    return {base, base + 1, base + 2, base + 3};
}

VertexColoring::VertexColoring(int n_qubits, int k) : n_qubits_(n_qubits) {
    detail::check_order(n_qubits);
    detail::check_position(n_qubits, k);
    mask_ = detail::qubit_mask(n_qubits, k);
}

Vertex VertexColoring::blue(std::size_t i) const noexcept {
    auto idx = static_cast<Vertex>(i);
    Vertex low = idx & (mask_ - 1);
    Vertex high = (idx & ~(mask_ - 1)) << 1;
    return high | low;
}

namespace {

using detail::VertexValue;

/// Writes the sorted, merged, pruned form of `items` (keys already oriented
/// u < v) back into a canonical edge list.
std::vector<Edge> reduce_edges(std::vector<Edge> items) {
    std::sort(items.begin(), items.end(), [](const Edge &a, const Edge &b) {
        return detail::edge_key(a.u, a.v) < detail::edge_key(b.u, b.v);
    });
    std::size_t out = 0;
    for (std::size_t i = 0; i < items.size();) {
        Edge acc = items[i];
        std::size_t j = i + 1;
        for (; j < items.size() && items[j].u == acc.u && items[j].v == acc.v; ++j) {
            acc.w += items[j].w;
        }
        acc.w = snap_weight(acc.w);
        if (std::abs(acc.w) >= kPruneTol) {
            items[out++] = acc;
        }
        i = j;
    }
    items.resize(out);
    return items;
}

/// Reads loops off a Laplacian given its diagonal and canonical edges.
std::vector<Loop> extract_loops(std::size_t order, const std::vector<VertexValue<double>> &diag,
                                const std::vector<Edge> &edges) {
    std::vector<VertexValue<double>> deg_items;
    deg_items.reserve(2 * edges.size());
    for (const Edge &e : edges) {
        double m = std::abs(e.w);
        deg_items.push_back({e.u, m});
        deg_items.push_back({e.v, m});
    }
    auto deg = detail::accumulate_by_vertex(order, std::move(deg_items));

    std::vector<Loop> loops;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < diag.size() || j < deg.size()) {
        Vertex vd = i < diag.size() ? diag[i].v : UINT32_MAX;
        Vertex ve = j < deg.size() ? deg[j].v : UINT32_MAX;
        Vertex v = std::min(vd, ve);
        double excess = 0;
        if (vd == v) {
            excess += diag[i++].value;
        }
        if (ve == v) {
            excess -= deg[j++].value;
        }
        double loop = 0.5 * excess;
        if (std::abs(loop) >= kPruneTol) {
            loops.push_back({v, loop});
        }
    }
    return loops;
}

/// Applies a vertex map that is a bijection; `sign` gives the factor for the
/// edge (u, v) in the original labels.
template <typename Map, typename Sign>
QGraph signed_relabel(const QGraph &g, Map map, Sign sign) {
    std::vector<Edge> edges;
    edges.reserve(g.num_edges());
    for (const Edge &e : g.edges()) {
        Vertex a = map(e.u);
        Vertex b = map(e.v);
        Complex w = sign(e.u, e.v) * e.w;
        if (a < b) {
            edges.push_back({a, b, w});
        } else {
            edges.push_back({b, a, std::conj(w)});
        }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge &x, const Edge &y) {
        return detail::edge_key(x.u, x.v) < detail::edge_key(y.u, y.v);
    });
    std::vector<Loop> loops;
    loops.reserve(g.num_loops());
    for (const Loop &l : g.loops()) {
        loops.push_back({map(l.v), l.weight});
    }
    std::sort(loops.begin(), loops.end(), [](const Loop &x, const Loop &y) { return x.v < y.v; });
    return detail::assume_canonical(g.n_qubits(), std::move(edges), std::move(loops));
}

}  // namespace

QGraph switch_last(const QGraph &g, const OneQubitGate &gate) {
    if (gate.kind == GateKind::I) {
        return g;
    }
    const Matrix2 u = gate_matrix(gate);
    const Matrix2 u_adj = u.adjoint();

    // Diagonal blocks: [[L(2j,2j), L(2j,2j+1)], [conj, L(2j+1,2j+1)]].
    auto diag = detail::laplacian_diagonal(g);
    std::vector<Edge> inner;
    std::vector<Edge> contributions;
    contributions.reserve(4 * g.num_edges() + diag.size() / 2);
    for (const Edge &e : g.edges()) {
        if ((e.u >> 1) == (e.v >> 1)) {
            inner.push_back(e);
        }
    }

    std::vector<VertexValue<double>> new_diag;
    new_diag.reserve(diag.size() + 1);
    std::size_t di = 0;
    std::size_t ii = 0;
    while (di < diag.size()) {
        std::size_t module = diag[di].v >> 1;
        Matrix2 block = Matrix2::Zero();
        for (; di < diag.size() && (diag[di].v >> 1) == module; ++di) {
            block(diag[di].v & 1, diag[di].v & 1) = diag[di].value;
        }
        // Every inner edge sits in a module with a nonzero diagonal.
        if (ii < inner.size() && (inner[ii].u >> 1) == module) {
            block(0, 1) = inner[ii].w;
            block(1, 0) = std::conj(inner[ii].w);
            ++ii;
        }
        Matrix2 out = u * block * u_adj;
        auto base = static_cast<Vertex>(2 * module);
        new_diag.push_back({base, out(0, 0).real()});
        new_diag.push_back({base + 1, out(1, 1).real()});
        contributions.push_back({base, base + 1, out(0, 1)});
    }

    // Off-diagonal blocks between modules: entry w at local (a, b) spreads to
    // every local (c, d) with coefficient U(c, a) conj(U(d, b)).
    for (const Edge &e : g.edges()) {
        if ((e.u >> 1) == (e.v >> 1)) {
            continue;
        }
        int a = static_cast<int>(e.u & 1);
        int b = static_cast<int>(e.v & 1);
        Vertex bu = e.u & ~Vertex{1};
        Vertex bv = e.v & ~Vertex{1};
        for (int c = 0; c < 2; ++c) {
            if (u(c, a) == 0.0) {
                continue;
            }
            Complex left = u(c, a) * e.w;
            for (int d = 0; d < 2; ++d) {
                Complex right = u_adj(b, d);
                if (right == 0.0) {
                    continue;
                }
                contributions.push_back({bu + static_cast<Vertex>(c), bv + static_cast<Vertex>(d), left * right});
            }
        }
    }

    auto edges = reduce_edges(std::move(contributions));
    auto loops = extract_loops(g.order(), new_diag, edges);
    return detail::assume_canonical(g.n_qubits(), std::move(edges), std::move(loops));
}

SwitchTrace switch_at_traced(const QGraph &g, int k, const OneQubitGate &gate) {
    detail::check_position(g.n_qubits(), k);
    if (k == g.n_qubits()) {
        QGraph switched = switch_last(g, gate);
        return {g, switched, switched};
    }
    QubitPermutation p = bit_swap(g.n_qubits(), k);
    QGraph relabeled = relabel_graph(g, p);
    QGraph switched = switch_last(relabeled, gate);
    QGraph result = relabel_graph(switched, p);
    return {std::move(relabeled), std::move(switched), std::move(result)};
}

QGraph switch_at(const QGraph &g, int k, const OneQubitGate &gate) {
    return switch_at_traced(g, k, gate).result;
}

QGraph fast_switch_pauli(const QGraph &g, int k, const OneQubitGate &gate) {
    detail::check_position(g.n_qubits(), k);
    if (!gate.is_pauli()) {
        throw Error(ErrorCode::UnsupportedGate, gate.name() + " is not a Pauli gate");
    }
    VertexColoring colors(g.n_qubits(), k);
    auto sign = [&](Vertex a, Vertex b) { return colors.same_color(a, b) ? 1.0 : -1.0; };
    switch (gate.kind) {
        case GateKind::X:
            return signed_relabel(
                g, [&](Vertex v) { return colors.conjugate(v); }, [](Vertex, Vertex) { return 1.0; });
        case GateKind::Y:
            return signed_relabel(g, [&](Vertex v) { return colors.conjugate(v); }, sign);
        default:
            return signed_relabel(g, [](Vertex v) { return v; }, sign);
    }
}

QGraph switch_cnot(const QGraph &g) {
    if (g.n_qubits() < 2) {
        throw Error(ErrorCode::NeedsTwoQubits, "CNOT needs at least two qubits");
    }
    return signed_relabel(g, cnot_vertex_map, [](Vertex, Vertex) { return 1.0; });
}

}  // namespace qgraph
