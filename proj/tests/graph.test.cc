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

#include <gtest/gtest.h>

#include "qgraph/error.h"

using namespace qgraph;

namespace {

template <typename F>
ErrorCode error_of(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected qgraph::Error";
    return ErrorCode::ParseError;
}

}  // namespace

TEST(graph, empty_graph_orders) {
    QGraph one = empty_graph(1);
    EXPECT_EQ(one.order(), 2u);
    EXPECT_EQ(one.num_edges(), 0u);
    EXPECT_EQ(one.num_loops(), 0u);
    EXPECT_EQ(one.admissibility(), Admissibility::RealNonnegative);

    QGraph two = empty_graph(2);
    EXPECT_EQ(two.order(), 4u);
    EXPECT_TRUE(two.empty());
}

TEST(graph, empty_graph_rejects_bad_order) {
    EXPECT_EQ(error_of([] { empty_graph(0); }), ErrorCode::InvalidOrder);
    EXPECT_EQ(error_of([] { empty_graph(kMaxQubits + 1); }), ErrorCode::InvalidOrder);
    EXPECT_NO_THROW(empty_graph(kMaxQubits));
}

TEST(graph, set_edge_bell) {
    QGraph bell = set_edge(empty_graph(2), 1, 2, 1.0);
    ASSERT_EQ(bell.num_edges(), 1u);
    EXPECT_EQ(bell.edges()[0], (Edge{1, 2, 1.0}));
    EXPECT_EQ(bell.edge_weight(2, 1), Complex(1.0));
    EXPECT_EQ(bell.edge_weight(0, 3), Complex(0.0));
}

TEST(graph, set_edge_orientation_conjugates) {
    QGraph g = set_edge(empty_graph(2), 3, 1, Complex(0.5, 0.25));
    ASSERT_EQ(g.num_edges(), 1u);
    EXPECT_EQ(g.edges()[0].u, 1u);
    EXPECT_EQ(g.edges()[0].v, 3u);
    EXPECT_EQ(g.edges()[0].w, Complex(0.5, -0.25));
    EXPECT_EQ(g.edge_weight(3, 1), Complex(0.5, 0.25));
    EXPECT_EQ(g.admissibility(), Admissibility::HermitianExtended);
}

TEST(graph, set_edge_zero_prunes) {
    QGraph g = set_edge(empty_graph(2), 0, 1, 2.0);
    g = set_edge(g, 0, 1, 0.0);
    EXPECT_EQ(g.num_edges(), 0u);
    g = set_edge(g, 0, 1, 1e-13);
    EXPECT_EQ(g.num_edges(), 0u);
}

TEST(graph, set_edge_replaces_weight) {
    QGraph g = set_edge(empty_graph(2), 0, 1, 2.0);
    g = set_edge(g, 1, 0, 3.0);
    ASSERT_EQ(g.num_edges(), 1u);
    EXPECT_EQ(g.edges()[0].w, Complex(3.0));
}

TEST(graph, set_edge_errors) {
    QGraph g = empty_graph(2);
    EXPECT_EQ(error_of([&] { set_edge(g, 0, 0, 1.0); }), ErrorCode::UseSetLoop);
    EXPECT_EQ(error_of([&] { set_edge(g, 0, 4, 1.0); }), ErrorCode::InvalidVertex);
}

TEST(graph, set_loop_basis_states) {
    QGraph rho0 = set_loop(empty_graph(1), 0, 0.5);
    ASSERT_EQ(rho0.num_loops(), 1u);
    EXPECT_EQ(rho0.loops()[0], (Loop{0, 0.5}));
    QGraph rho1 = set_loop(empty_graph(1), 1, 0.5);
    EXPECT_EQ(rho1.loop_weight(1), 0.5);
    EXPECT_EQ(rho1.loop_weight(0), 0.0);
}

TEST(graph, set_loop_zero_prunes_and_negative_downgrades) {
    QGraph g = set_loop(empty_graph(1), 0, 0.5);
    EXPECT_EQ(set_loop(g, 0, 0.0).num_loops(), 0u);
    QGraph neg = set_loop(g, 1, -0.25);
    EXPECT_EQ(neg.admissibility(), Admissibility::HermitianExtended);
    EXPECT_TRUE(neg.has_negative_loops());
    EXPECT_EQ(error_of([&] { set_loop(g, 2, 1.0); }), ErrorCode::InvalidVertex);
}

TEST(graph, degree) {
    QGraph rho0 = set_loop(empty_graph(1), 0, 0.5);
    EXPECT_DOUBLE_EQ(degree(rho0, 0), 0.5);
    EXPECT_DOUBLE_EQ(degree(rho0, 1), 0.0);

    QGraph bell = set_edge(empty_graph(2), 1, 2, 1.0);
    EXPECT_DOUBLE_EQ(degree(bell, 1), 1.0);
    EXPECT_DOUBLE_EQ(degree(bell, 0), 0.0);

    QGraph mixed = set_loop(set_edge(set_edge(empty_graph(2), 0, 1, -2.0), 0, 3, Complex(0, 1)), 0, -0.5);
    EXPECT_DOUBLE_EQ(degree(mixed, 0), 3.5);
    EXPECT_EQ(error_of([&] { degree(mixed, 9); }), ErrorCode::InvalidVertex);
}

TEST(graph, builder_accumulates_and_prunes) {
    GraphBuilder b(2);
    b.add_edge(0, 1, 1.0).add_edge(1, 0, 2.0).add_edge(2, 3, 1.0).add_edge(3, 2, -1.0);
    b.add_loop(1, 0.25).add_loop(1, 0.25).add_loop(2, 1.0).add_loop(2, -1.0);
    QGraph g = std::move(b).build();
    ASSERT_EQ(g.num_edges(), 1u);
    EXPECT_EQ(g.edges()[0], (Edge{0, 1, 3.0}));
    ASSERT_EQ(g.num_loops(), 1u);
    EXPECT_EQ(g.loops()[0], (Loop{1, 0.5}));
}

TEST(graph, builder_snaps_tiny_components) {
    GraphBuilder b(1);
    b.add_edge(0, 1, Complex(1.0, 1e-15));
    QGraph g = std::move(b).build();
    EXPECT_EQ(g.edges()[0].w, Complex(1.0, 0.0));
    EXPECT_EQ(g.admissibility(), Admissibility::RealNonnegative);
}

TEST(graph, laplacian_trace_formula) {
    QGraph g = set_loop(set_edge(set_edge(empty_graph(2), 0, 1, -2.0), 1, 3, 0.5), 3, 0.75);
    EXPECT_DOUBLE_EQ(g.laplacian_trace(), 2 * (2.0 + 0.5) + 2 * 0.75);
}

TEST(graph, edges_are_sorted) {
    QGraph g = empty_graph(3);
    g = set_edge(g, 6, 2, 1.0);
    g = set_edge(g, 0, 7, 1.0);
    g = set_edge(g, 1, 2, 1.0);
    ASSERT_EQ(g.num_edges(), 3u);
    EXPECT_EQ(g.edges()[0].u, 0u);
    EXPECT_EQ(g.edges()[1].u, 1u);
    EXPECT_EQ(g.edges()[2].u, 2u);
    EXPECT_EQ(g.edges()[2].v, 6u);
}
