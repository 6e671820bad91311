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

#include "qgraph/graph.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgraph/error.h"

namespace qgraph {

namespace detail {

void check_order(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw Error(ErrorCode::InvalidOrder, "qubit count must be in [1, " + std::to_string(kMaxQubits) +
                                                 "], got " + std::to_string(n_qubits));
    }
}

void check_vertex(const QGraph &g, Vertex v) {
    if (v >= g.order()) {
        throw Error(ErrorCode::InvalidVertex,
                    "vertex " + std::to_string(v) + " outside [0, " + std::to_string(g.order()) + ")");
    }
}

void check_same_order(const QGraph &a, const QGraph &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw Error(ErrorCode::OrderMismatch, "graphs on " + std::to_string(a.n_qubits()) + " and " +
                                                  std::to_string(b.n_qubits()) + " qubits");
    }
}

QGraph assume_canonical(int n_qubits, std::vector<Edge> edges, std::vector<Loop> loops) {
    check_order(n_qubits);
    return QGraph(n_qubits, std::move(edges), std::move(loops));
}

}  // namespace detail

Complex snap_weight(Complex w) {
    double re = std::abs(w.real()) < kPruneTol ? 0.0 : w.real();
    double im = std::abs(w.imag()) < kPruneTol ? 0.0 : w.imag();
    return {re, im};
}

QGraph::QGraph(int n_qubits) : n_qubits_(n_qubits) {
    detail::check_order(n_qubits);
}

QGraph::QGraph(int n_qubits, std::vector<Edge> edges, std::vector<Loop> loops)
    : n_qubits_(n_qubits), edges_(std::move(edges)), loops_(std::move(loops)) {
    bool real = std::all_of(edges_.begin(), edges_.end(), [](const Edge &e) { return e.w.imag() == 0.0; });
    if (!real || has_negative_loops()) {
        admissibility_ = Admissibility::HermitianExtended;
    }
}

bool QGraph::has_negative_loops() const noexcept {
    return std::any_of(loops_.begin(), loops_.end(), [](const Loop &l) { return l.weight < 0; });
}

Complex QGraph::edge_weight(Vertex u, Vertex v) const {
    detail::check_vertex(*this, u);
    detail::check_vertex(*this, v);
    if (u == v) {
        throw Error(ErrorCode::UseSetLoop, "edge_weight called with u == v; use loop_weight");
    }
    Vertex lo = std::min(u, v);
    Vertex hi = std::max(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{lo, hi},
                               [](const Edge &e, const std::pair<Vertex, Vertex> &k) {
                                   return std::pair{e.u, e.v} < k;
                               });
    if (it == edges_.end() || it->u != lo || it->v != hi) {
        return 0.0;
    }
    return u < v ? it->w : std::conj(it->w);
}

double QGraph::loop_weight(Vertex v) const {
    detail::check_vertex(*this, v);
    auto it = std::lower_bound(loops_.begin(), loops_.end(), v, [](const Loop &l, Vertex x) { return l.v < x; });
    return it != loops_.end() && it->v == v ? it->weight : 0.0;
}

double QGraph::degree(Vertex v) const {
    detail::check_vertex(*this, v);
    double d = std::abs(loop_weight(v));
    for (const Edge &e : edges_) {
        if (e.u == v || e.v == v) {
            d += std::abs(e.w);
        }
    }
    return d;
}

double QGraph::laplacian_trace() const noexcept {
    double t = 0;
    for (const Edge &e : edges_) {
        t += 2 * std::abs(e.w);
    }
    for (const Loop &l : loops_) {
        t += 2 * l.weight;
    }
    return t;
}

bool QGraph::operator==(const QGraph &other) const {
    return n_qubits_ == other.n_qubits_ && edges_ == other.edges_ && loops_ == other.loops_;
}

GraphBuilder::GraphBuilder(int n_qubits) : n_qubits_(n_qubits) {
    detail::check_order(n_qubits);
}

void GraphBuilder::reserve(std::size_t edges, std::size_t loops) {
    edges_.reserve(edges);
    loops_.reserve(loops);
}

GraphBuilder &GraphBuilder::add_edge(Vertex u, Vertex v, Complex w) {
    std::size_t order = std::size_t{1} << n_qubits_;
    if (u >= order || v >= order) {
        throw Error(ErrorCode::InvalidVertex, "edge {" + std::to_string(u) + ", " + std::to_string(v) +
                                                  "} outside [0, " + std::to_string(order) + ")");
    }
    if (u == v) {
        throw Error(ErrorCode::UseSetLoop, "self-edge at vertex " + std::to_string(u) + "; use a loop");
    }
    if (u < v) {
        edges_.push_back({u, v, w});
    } else {
        edges_.push_back({v, u, std::conj(w)});
    }
    return *this;
}

GraphBuilder &GraphBuilder::add_loop(Vertex v, double weight) {
    std::size_t order = std::size_t{1} << n_qubits_;
    if (v >= order) {
        throw Error(ErrorCode::InvalidVertex,
                    "loop at " + std::to_string(v) + " outside [0, " + std::to_string(order) + ")");
    }
    loops_.push_back({v, weight});
    return *this;
}

QGraph GraphBuilder::build() && {
    std::sort(edges_.begin(), edges_.end(), [](const Edge &a, const Edge &b) {
        return detail::edge_key(a.u, a.v) < detail::edge_key(b.u, b.v);
    });
    std::size_t out = 0;
    for (std::size_t i = 0; i < edges_.size();) {
        Edge acc = edges_[i];
        std::size_t j = i + 1;
        for (; j < edges_.size() && edges_[j].u == acc.u && edges_[j].v == acc.v; ++j) {
            acc.w += edges_[j].w;
        }
        acc.w = snap_weight(acc.w);
        if (std::abs(acc.w) >= kPruneTol) {
            edges_[out++] = acc;
        }
        i = j;
    }
    edges_.resize(out);

    std::sort(loops_.begin(), loops_.end(), [](const Loop &a, const Loop &b) { return a.v < b.v; });
    out = 0;
    for (std::size_t i = 0; i < loops_.size();) {
        Loop acc = loops_[i];
        std::size_t j = i + 1;
        for (; j < loops_.size() && loops_[j].v == acc.v; ++j) {
            acc.weight += loops_[j].weight;
        }
        if (std::abs(acc.weight) >= kPruneTol) {
            loops_[out++] = acc;
        }
        i = j;
    }
    loops_.resize(out);

    return QGraph(n_qubits_, std::move(edges_), std::move(loops_));
}

QGraph empty_graph(int n_qubits) {
    return QGraph(n_qubits);
}

QGraph set_edge(const QGraph &g, Vertex u, Vertex v, Complex w) {
    if (u == v) {
        throw Error(ErrorCode::UseSetLoop, "set_edge called with u == v = " + std::to_string(u));
    }
    detail::check_vertex(g, u);
    detail::check_vertex(g, v);
    Vertex lo = std::min(u, v);
    Vertex hi = std::max(u, v);
    GraphBuilder b(g.n_qubits());
    b.reserve(g.num_edges() + 1, g.num_loops());
    for (const Edge &e : g.edges()) {
        if (e.u != lo || e.v != hi) {
            b.add_edge(e.u, e.v, e.w);
        }
    }
    b.add_edge(u, v, w);
    for (const Loop &l : g.loops()) {
        b.add_loop(l.v, l.weight);
    }
    return std::move(b).build();
}

QGraph set_loop(const QGraph &g, Vertex v, double weight) {
    detail::check_vertex(g, v);
    GraphBuilder b(g.n_qubits());
    b.reserve(g.num_edges(), g.num_loops() + 1);
    for (const Edge &e : g.edges()) {
        b.add_edge(e.u, e.v, e.w);
    }
    for (const Loop &l : g.loops()) {
        if (l.v != v) {
            b.add_loop(l.v, l.weight);
        }
    }
    b.add_loop(v, weight);
    return std::move(b).build();
}

double degree(const QGraph &g, Vertex v) {
    return g.degree(v);
}

}  // namespace qgraph
