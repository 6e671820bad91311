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

#ifndef QGRAPH_SRC_ACCUMULATE_H
#define QGRAPH_SRC_ACCUMULATE_H

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "qgraph/graph.h"

namespace qgraph::detail {

template <typename T>
struct VertexValue {
    Vertex v;
    T value;
};

/// Sums contributions per vertex and returns them sorted by vertex.
///
/// Uses a dense scratch array when the vertex range is small relative to the
/// number of contributions, otherwise sorts.
template <typename T>
std::vector<VertexValue<T>> accumulate_by_vertex(std::size_t order, std::vector<VertexValue<T>> items) {
    std::vector<VertexValue<T>> out;
    if (items.empty()) {
        return out;
    }
    if (order <= 8 * items.size() + 1024) {
        std::vector<T> dense(order, T{});
        std::vector<bool> seen(order, false);
        for (const auto &it : items) {
            dense[it.v] += it.value;
            seen[it.v] = true;
        }
        for (std::size_t v = 0; v < order; ++v) {
            if (seen[v]) {
                out.push_back({static_cast<Vertex>(v), dense[v]});
            }
        }
        return out;
    }
    std::sort(items.begin(), items.end(), [](const auto &a, const auto &b) { return a.v < b.v; });
    for (const auto &it : items) {
        if (!out.empty() && out.back().v == it.v) {
            out.back().value += it.value;
        } else {
            out.push_back(it);
        }
    }
    return out;
}

/// Diagonal of L(G) for every vertex that has an incident edge or a loop.
inline std::vector<VertexValue<double>> laplacian_diagonal(const QGraph &g) {
    std::vector<VertexValue<double>> items;
    items.reserve(2 * g.num_edges() + g.num_loops());
    for (const Edge &e : g.edges()) {
        double m = std::abs(e.w);
        items.push_back({e.u, m});
        items.push_back({e.v, m});
    }
    for (const Loop &l : g.loops()) {
        items.push_back({l.v, 2 * l.weight});
    }
    return accumulate_by_vertex(g.order(), std::move(items));
}

}  // namespace qgraph::detail

#endif
