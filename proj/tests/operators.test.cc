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

#include "qgraph/operators.h"

#include <gtest/gtest.h>

#include "qgraph/error.h"
#include "support/test_support.h"

using namespace qgraph;
using namespace qgraph::testing;

namespace {

const Complex kI{0, 1};

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

double unitarity_defect(const DenseMatrix &u) {
    return max_abs_diff(u * u.adjoint(), DenseMatrix::Identity(u.rows(), u.cols()));
}

std::vector<OneQubitGate> named_gates() {
    return {OneQubitGate::identity(), OneQubitGate::x(), OneQubitGate::y(), OneQubitGate::z(), OneQubitGate::h()};
}

}  // namespace

TEST(gate_matrix, paulis_and_hadamard) {
    Matrix2 x, y, z;
    x << 0, 1, 1, 0;
    y << 0, -kI, kI, 0;
    z << 1, 0, 0, -1;
    EXPECT_EQ(gate_matrix(OneQubitGate::x()), x);
    EXPECT_EQ(gate_matrix(OneQubitGate::y()), y);
    EXPECT_EQ(gate_matrix(OneQubitGate::z()), z);
    Matrix2 h = (x + z) / std::sqrt(2.0);
    EXPECT_LT((gate_matrix(OneQubitGate::h()) - h).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(gate_matrix, general_special_cases) {
    Matrix2 ix = kI * gate_matrix(OneQubitGate::x());
    Matrix2 iy = kI * gate_matrix(OneQubitGate::y());
    Matrix2 iz = kI * gate_matrix(OneQubitGate::z());
    Matrix2 ih = kI * gate_matrix(OneQubitGate::h());
    auto dist = [](const Matrix2 &a, const Matrix2 &b) { return (a - b).cwiseAbs().maxCoeff(); };

    EXPECT_LT(dist(gate_matrix(OneQubitGate::general(M_PI / 2, 0, M_PI / 2)), ix), 1e-15);
    EXPECT_LT(dist(gate_matrix(OneQubitGate::general(0, M_PI / 2, 0)), iz), 1e-15);
    Matrix2 expected_iy;
    expected_iy << 0, 1, -1, 0;
    EXPECT_LT(dist(gate_matrix(OneQubitGate::general(M_PI / 2, 0, 0)), expected_iy), 1e-15);
    EXPECT_LT(dist(expected_iy, iy), 1e-15);
    EXPECT_LT(dist(gate_matrix(OneQubitGate::general(M_PI / 4, M_PI / 2, M_PI / 2)), ih), 1e-15);

    // (pi/2, *, 3pi/2) is -iX rather than Y.
    EXPECT_LT(dist(gate_matrix(OneQubitGate::general(M_PI / 2, 0, 3 * M_PI / 2)), -ix), 1e-15);
}

TEST(gate_matrix, general_is_unitary) {
    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        Matrix2 u = gate_matrix(random_general_gate(rng));
        EXPECT_LT((u * u.adjoint() - Matrix2::Identity()).cwiseAbs().maxCoeff(), 1e-12);
    }
    EXPECT_THROW(OneQubitGate::general(NAN, 0, 0), Error);
}

TEST(gate_matrix, phase_does_not_change_conjugation) {
    Rng rng(22);
    Matrix2 rho;
    rho << 0.3, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.7;
    std::vector<std::pair<OneQubitGate, OneQubitGate>> pairs = {
        {OneQubitGate::general(M_PI / 2, 0, M_PI / 2), OneQubitGate::x()},
        {OneQubitGate::general(M_PI / 2, 1.234, 0), OneQubitGate::y()},
        {OneQubitGate::general(0, M_PI / 2, 0), OneQubitGate::z()},
        {OneQubitGate::general(M_PI / 4, M_PI / 2, M_PI / 2), OneQubitGate::h()},
    };
    for (const auto &[general, plain] : pairs) {
        Matrix2 a = gate_matrix(general) * rho * gate_matrix(general).adjoint();
        Matrix2 b = gate_matrix(plain) * rho * gate_matrix(plain).adjoint();
        EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-15) << plain.name();
    }
}

TEST(embed_at, examples) {
    DenseMatrix x1 = embed_at(1, 1, OneQubitGate::x());
    EXPECT_EQ(max_abs_diff(x1, DenseMatrix(gate_matrix(OneQubitGate::x()))), 0.0);

    Matrix2 h = gate_matrix(OneQubitGate::h());
    DenseMatrix h2 = embed_at(2, 2, OneQubitGate::h());
    DenseMatrix diag = DenseMatrix::Zero(4, 4);
    diag.block(0, 0, 2, 2) = h;
    diag.block(2, 2, 2, 2) = h;
    EXPECT_EQ(max_abs_diff(h2, diag), 0.0);

    DenseMatrix swap_msb = DenseMatrix::Zero(4, 4);
    swap_msb(0, 2) = swap_msb(2, 0) = swap_msb(1, 3) = swap_msb(3, 1) = 1;
    EXPECT_EQ(max_abs_diff(embed_at(2, 1, OneQubitGate::x()), swap_msb), 0.0);

    EXPECT_EQ(error_of([] { embed_at(2, 3, OneQubitGate::x()); }), ErrorCode::PositionOutOfRange);
    EXPECT_EQ(error_of([] { embed_at(2, 0, OneQubitGate::x()); }), ErrorCode::PositionOutOfRange);
}

TEST(embed_at, matches_kronecker_reference_and_is_unitary) {
    Rng rng(23);
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            OneQubitGate g = (n + k) % 2 ? random_general_gate(rng) : named_gates()[(n * k) % 5];
            DenseMatrix u = embed_at(n, k, g);
            EXPECT_LT(max_abs_diff(u, reference_embed(n, k, gate_matrix(g))), 1e-15) << n << " " << k;
            EXPECT_LT(unitarity_defect(u), 1e-12);
        }
    }
}

TEST(cnot_full, examples) {
    DenseMatrix c2 = cnot_full(2);
    DenseMatrix expected(4, 4);
    expected << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
    EXPECT_EQ(max_abs_diff(c2, expected), 0.0);

    DenseMatrix c3 = cnot_full(3);
    DenseMatrix block = DenseMatrix::Zero(8, 8);
    block.block(0, 0, 4, 4) = expected;
    block.block(4, 4, 4, 4) = expected;
    EXPECT_EQ(max_abs_diff(c3, block), 0.0);

    for (int n = 2; n <= 8; ++n) {
        DenseMatrix c = cnot_full(n);
        EXPECT_EQ(max_abs_diff(c * c, DenseMatrix::Identity(c.rows(), c.cols())), 0.0);
        EXPECT_EQ(max_abs_diff(c, reference_cnot(n)), 0.0);
        EXPECT_LT(unitarity_defect(c), 1e-12);
    }
    EXPECT_EQ(error_of([] { cnot_full(1); }), ErrorCode::NeedsTwoQubits);
}

TEST(bit_swap, examples) {
    QubitPermutation p = bit_swap(2, 1);
    EXPECT_EQ(p.mapping(), (std::vector<Vertex>{0, 2, 1, 3}));

    QubitPermutation q = bit_swap(3, 1);
    EXPECT_EQ(q.mapping(), (std::vector<Vertex>{0, 4, 2, 6, 1, 5, 3, 7}));

    for (int n = 1; n <= 6; ++n) {
        EXPECT_TRUE(bit_swap(n, n).is_identity());
    }
    EXPECT_EQ(error_of([] { bit_swap(3, 4); }), ErrorCode::PositionOutOfRange);
}

TEST(bit_swap, involution) {
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            QubitPermutation p = bit_swap(n, k);
            EXPECT_TRUE(p.compose(p).is_identity());
        }
    }
}

TEST(bit_swap, conjugates_last_qubit_gate_to_slot_k) {
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= n; ++k) {
            DenseMatrix p = bit_swap(n, k).dense();
            for (const OneQubitGate &g : {OneQubitGate::x(), OneQubitGate::y(), OneQubitGate::z(), OneQubitGate::h()}) {
                DenseMatrix moved = p * embed_at(n, n, g) * p;
                EXPECT_LT(max_abs_diff(embed_at(n, k, g), moved), 1e-12) << n << " " << k << " " << g.name();
            }
        }
    }
}

TEST(relabel_graph, examples) {
    QubitPermutation p = bit_swap(2, 1);
    QGraph ten = set_loop(empty_graph(2), 2, 0.5);
    QGraph moved = relabel_graph(ten, p);
    EXPECT_EQ(moved, set_loop(empty_graph(2), 1, 0.5));

    QGraph edge = set_edge(empty_graph(2), 0, 2, -1.0);
    EXPECT_EQ(relabel_graph(edge, p), set_edge(empty_graph(2), 0, 1, -1.0));

    Rng rng(24);
    QGraph g = random_hermitian_graph(rng, 3);
    EXPECT_EQ(relabel_graph(g, QubitPermutation::identity(3)), g);
    EXPECT_EQ(error_of([&] { relabel_graph(g, p); }), ErrorCode::OrderMismatch);
}

TEST(relabel_graph, orientation_flip_conjugates) {
    QGraph g = set_edge(empty_graph(2), 1, 2, Complex(0.5, 0.5));
    QGraph moved = relabel_graph(g, bit_swap(2, 1));
    ASSERT_EQ(moved.num_edges(), 1u);
    EXPECT_EQ(moved.edges()[0], (Edge{1, 2, Complex(0.5, -0.5)}));
}

TEST(relabel_graph, matches_dense_conjugation_and_is_involutive) {
    Rng rng(25);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + trial % 6;
        int k = uniform_int(rng, 1, n);
        QGraph g = trial % 2 ? random_real_graph(rng, n) : random_hermitian_graph(rng, n);
        QubitPermutation p = bit_swap(n, k);
        DenseMatrix pd = p.dense();
        QGraph moved = relabel_graph(g, p);
        DenseMatrix expected = pd * signless_laplacian(g).matrix() * pd.adjoint();
        EXPECT_LT(max_abs_diff(signless_laplacian(moved).matrix(), expected), 1e-12);
        EXPECT_EQ(relabel_graph(moved, p), g);
    }
}

TEST(gate_op, validation_and_names) {
    EXPECT_NO_THROW(validate_op(gate_at(OneQubitGate::h(), 2), 2));
    EXPECT_EQ(error_of([] { validate_op(gate_at(OneQubitGate::h(), 3), 2); }), ErrorCode::PositionOutOfRange);
    EXPECT_EQ(error_of([] { validate_op(cnot_last_pair(), 1); }), ErrorCode::NeedsTwoQubits);
    EXPECT_EQ(op_name(gate_at(OneQubitGate::h(), 1)), "H@1");
    EXPECT_EQ(op_name(cnot_last_pair()), "CNOT");
    EXPECT_EQ(op_name(gate_at(OneQubitGate::general(0.5, 0, 1.25), 3)), "U(0.5,0,1.25)@3");
}

TEST(permutation, from_map_rejects_non_bijection) {
    EXPECT_EQ(error_of([] { QubitPermutation::from_map(1, {0, 0}); }), ErrorCode::InvalidVertex);
    EXPECT_EQ(error_of([] { QubitPermutation::from_map(1, {0}); }), ErrorCode::OrderMismatch);
}
