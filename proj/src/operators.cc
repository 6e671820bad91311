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

#include <cmath>
#include <cstdio>
#include <numeric>

#include "qgraph/error.h"

namespace qgraph {

namespace detail {

void check_position(int n_qubits, int k) {
    if (k < 1 || k > n_qubits) {
        throw Error(ErrorCode::PositionOutOfRange,
                    "qubit position " + std::to_string(k) + " outside [1, " + std::to_string(n_qubits) + "]");
    }
}

}  // namespace detail

OneQubitGate OneQubitGate::general(double theta, double phi1, double phi2) {
    if (!std::isfinite(theta) || !std::isfinite(phi1) || !std::isfinite(phi2)) {
        throw Error(ErrorCode::ParseError, "gate angles must be finite");
    }
    return {GateKind::General, theta, phi1, phi2};
}

std::string OneQubitGate::name() const {
    switch (kind) {
        case GateKind::I:
            return "I";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
        case GateKind::H:
            return "H";
        case GateKind::General: {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "U(%.17g,%.17g,%.17g)", theta, phi1, phi2);
            return buf;
        }
    }
    return "?";
}

Matrix2 gate_matrix(const OneQubitGate &g) {
    const Complex i{0, 1};
    Matrix2 m;
    switch (g.kind) {
        case GateKind::I:
            m << 1, 0, 0, 1;
            break;
        case GateKind::X:
            m << 0, 1, 1, 0;
            break;
        case GateKind::Y:
            m << 0, -i, i, 0;
            break;
        case GateKind::Z:
            m << 1, 0, 0, -1;
            break;
        case GateKind::H: {
            double s = 1 / std::sqrt(2.0);
            m << s, s, s, -s;
            break;
        }
        case GateKind::General: {
            double c = std::cos(g.theta);
            double s = std::sin(g.theta);
            m << std::polar(c, g.phi1), std::polar(s, g.phi2), -std::polar(s, -g.phi2), std::polar(c, -g.phi1);
            break;
        }
    }
    return m;
}

DenseMatrix embed_at(int n_qubits, int k, const OneQubitGate &g, int dense_cap) {
    detail::check_order(n_qubits);
    detail::check_position(n_qubits, k);
    detail::check_dense_cap(n_qubits, dense_cap);
    Matrix2 u = gate_matrix(g);
    auto order = Eigen::Index{1} << n_qubits;
    int shift = n_qubits - k;
    Eigen::Index mask = Eigen::Index{1} << shift;
    DenseMatrix out = DenseMatrix::Zero(order, order);
    for (Eigen::Index r = 0; r < order; ++r) {
        Eigen::Index rest = r & ~mask;
        for (Eigen::Index b = 0; b < 2; ++b) {
            Eigen::Index c = rest | (b << shift);
            out(r, c) = u((r >> shift) & 1, b);
        }
    }
    return out;
}

DenseMatrix cnot_full(int n_qubits, int dense_cap) {
    detail::check_order(n_qubits);
    if (n_qubits < 2) {
        throw Error(ErrorCode::NeedsTwoQubits, "CNOT needs at least two qubits");
    }
    detail::check_dense_cap(n_qubits, dense_cap);
    auto order = Eigen::Index{1} << n_qubits;
    DenseMatrix out = DenseMatrix::Zero(order, order);
    for (Eigen::Index r = 0; r < order; ++r) {
        Eigen::Index c = (r & 2) ? (r ^ 1) : r;
        out(r, c) = 1;
    }
    return out;
}

QubitPermutation::QubitPermutation(int n_qubits, std::vector<Vertex> mapping)
    : n_qubits_(n_qubits), mapping_(std::move(mapping)) {
}

QubitPermutation QubitPermutation::identity(int n_qubits) {
    detail::check_order(n_qubits);
    std::vector<Vertex> m(std::size_t{1} << n_qubits);
    std::iota(m.begin(), m.end(), Vertex{0});
    return QubitPermutation(n_qubits, std::move(m));
}

QubitPermutation QubitPermutation::from_map(int n_qubits, std::vector<Vertex> mapping) {
    detail::check_order(n_qubits);
    std::size_t order = std::size_t{1} << n_qubits;
    if (mapping.size() != order) {
        throw Error(ErrorCode::OrderMismatch, "permutation map has " + std::to_string(mapping.size()) +
                                                  " entries, expected " + std::to_string(order));
    }
    std::vector<bool> hit(order, false);
    for (Vertex v : mapping) {
        if (v >= order || hit[v]) {
            throw Error(ErrorCode::InvalidVertex, "mapping is not a bijection");
        }
        hit[v] = true;
    }
    return QubitPermutation(n_qubits, std::move(mapping));
}

bool QubitPermutation::is_identity() const {
    for (std::size_t v = 0; v < mapping_.size(); ++v) {
        if (mapping_[v] != v) {
            return false;
        }
    }
    return true;
}

QubitPermutation QubitPermutation::compose(const QubitPermutation &then) const {
    if (then.n_qubits_ != n_qubits_) {
        throw Error(ErrorCode::OrderMismatch, "permutations act on different orders");
    }
    std::vector<Vertex> m(mapping_.size());
    for (std::size_t v = 0; v < m.size(); ++v) {
        m[v] = then.mapping_[mapping_[v]];
    }
    return QubitPermutation(n_qubits_, std::move(m));
}

DenseMatrix QubitPermutation::dense(int dense_cap) const {
    detail::check_dense_cap(n_qubits_, dense_cap);
    auto order = static_cast<Eigen::Index>(mapping_.size());
    DenseMatrix p = DenseMatrix::Zero(order, order);
    for (Eigen::Index v = 0; v < order; ++v) {
        p(mapping_[v], v) = 1;
    }
    return p;
}

QubitPermutation bit_swap(int n_qubits, int k) {
    detail::check_order(n_qubits);
    detail::check_position(n_qubits, k);
    int hi = n_qubits - k;
    std::vector<Vertex> m(std::size_t{1} << n_qubits);
    for (std::size_t v = 0; v < m.size(); ++v) {
        auto x = static_cast<Vertex>(v);
        Vertex differ = ((x >> hi) ^ x) & 1;
        m[v] = x ^ ((differ << hi) | differ);
    }
    return QubitPermutation::from_map(n_qubits, std::move(m));
}

QGraph relabel_graph(const QGraph &g, const QubitPermutation &p) {
    if (g.n_qubits() != p.n_qubits()) {
        throw Error(ErrorCode::OrderMismatch, "graph on " + std::to_string(g.n_qubits()) +
                                                  " qubits, permutation on " + std::to_string(p.n_qubits()));
    }
    GraphBuilder b(g.n_qubits());
    b.reserve(g.num_edges(), g.num_loops());
    for (const Edge &e : g.edges()) {
        b.add_edge(p(e.u), p(e.v), e.w);
    }
    for (const Loop &l : g.loops()) {
        b.add_loop(p(l.v), l.weight);
    }
    return std::move(b).build();
}

GateOp gate_at(const OneQubitGate &g, int position) {
    return OneQubitOp{g, position};
}

GateOp cnot_last_pair() {
    return CNotLastPair{};
}

void validate_op(const GateOp &op, int n_qubits) {
    if (const auto *one = std::get_if<OneQubitOp>(&op)) {
        detail::check_position(n_qubits, one->position);
    } else if (n_qubits < 2) {
        throw Error(ErrorCode::NeedsTwoQubits, "CNOT needs at least two qubits");
    }
}

std::string op_name(const GateOp &op) {
    if (const auto *one = std::get_if<OneQubitOp>(&op)) {
        return one->gate.name() + "@" + std::to_string(one->position);
    }
    return "CNOT";
}

DenseMatrix dense_operator(const GateOp &op, int n_qubits, int dense_cap) {
    validate_op(op, n_qubits);
    detail::check_dense_cap(n_qubits, dense_cap);
    if (const auto *one = std::get_if<OneQubitOp>(&op)) {
        return embed_at(n_qubits, one->position, one->gate, dense_cap);
    }
    return cnot_full(n_qubits, dense_cap);
}

}  // namespace qgraph
