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

#ifndef QGRAPH_GRAPH_IO_H
#define QGRAPH_GRAPH_IO_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qgraph/graph.h"
#include "qgraph/operators.h"

namespace qgraph {

/// On-disk form of a graph:
///
///     {"n_qubits": 2,
///      "edges": [{"u": 1, "v": 2, "re": 1.0, "im": 0.0}],
///      "loops": [{"v": 2, "weight": 0.5}],
///      "metadata": {"label": "..."}}
///
/// Edges are written sorted by (u, v) with u < v, loops sorted by v.
/// `metadata` is optional.
struct GraphFile {
    QGraph graph;
    std::optional<std::string> label;
};

nlohmann::json graph_to_json(const QGraph &g, const std::optional<std::string> &label = std::nullopt);
/// Throws ParseError on schema violations.
GraphFile graph_from_json(const nlohmann::json &j);

std::string serialize_graph(const QGraph &g, const std::optional<std::string> &label = std::nullopt);
GraphFile parse_graph(std::string_view text);

/// Undirected DOT rendering; loops become self-edges.
std::string to_dot(const QGraph &g);

/// "1", "-0.5", "0.5+0.25i", "0.5-0.25i".
std::string format_weight(Complex w);

/// Scientific notation with one decimal and a bare exponent: "0.0e0", "1.2e-16".
std::string format_deviation(double x);

/// Parses "H@1,X@2,CNOT,U(0.5,0,1.2)@3". Positions are not range-checked.
std::vector<GateOp> parse_gate_spec(std::string_view spec);

}  // namespace qgraph

#endif
