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

#ifndef QGRAPH_OPERATORS_H
#define QGRAPH_OPERATORS_H

#include <Eigen/Dense>
#include <string>
#include <variant>
#include <vector>

#include "qgraph/graph.h"
#include "qgraph/laplacian.h"

namespace qgraph {

using Matrix2 = Eigen::Matrix2cd;

enum class GateKind { I, X, Y, Z, H, General };

/// A single-qubit gate. `General` is the SU(2) family
///
///     [  e^{i phi1} cos(theta)    e^{i phi2} sin(theta) ]
///     [ -e^{-i phi2} sin(theta)   e^{-i phi1} cos(theta) ]
///
/// which contains iX (pi/2, 0, pi/2), iY (pi/2, *, 0), iZ (0, pi/2, 0) and
/// iH (pi/4, pi/2, pi/2).
struct OneQubitGate {
    GateKind kind = GateKind::I;
    double theta = 0;
    double phi1 = 0;
    double phi2 = 0;

    static OneQubitGate identity() {
        return {GateKind::I};
    }
    static OneQubitGate x() {
        return {GateKind::X};
    }
    static OneQubitGate y() {
        return {GateKind::Y};
    }
    static OneQubitGate z() {
        return {GateKind::Z};
    }
    static OneQubitGate h() {
        return {GateKind::H};
    }
    static OneQubitGate general(double theta, double phi1, double phi2);

    bool is_pauli() const noexcept {
        return kind == GateKind::X || kind == GateKind::Y || kind == GateKind::Z;
    }
    std::string name() const;

    bool operator==(const OneQubitGate &other) const = default;
};

Matrix2 gate_matrix(const OneQubitGate &g);

/// I (x) ... (x) U (x) ... (x) I with U in tensor slot k (1-based, slot 1 is
/// the most significant bit of the vertex label).
DenseMatrix embed_at(int n_qubits, int k, const OneQubitGate &g, int dense_cap = kDefaultDenseCap);

/// I (x) ... (x) I (x) CNOT acting on the last two qubits.
DenseMatrix cnot_full(int n_qubits, int dense_cap = kDefaultDenseCap);

/// A vertex relabeling of {0,1}^n stored as an explicit index map.
class QubitPermutation {
   public:
    static QubitPermutation identity(int n_qubits);
    static QubitPermutation from_map(int n_qubits, std::vector<Vertex> mapping);

    int n_qubits() const noexcept {
        return n_qubits_;
    }
    Vertex operator()(Vertex v) const {
        return mapping_[v];
    }
    const std::vector<Vertex> &mapping() const noexcept {
        return mapping_;
    }
    bool is_identity() const;
    QubitPermutation compose(const QubitPermutation &then) const;

    /// Dense permutation matrix P with P e_v = e_{p(v)}. Only for oracles.
    DenseMatrix dense(int dense_cap = kDefaultDenseCap) const;

    bool operator==(const QubitPermutation &other) const = default;

   private:
    QubitPermutation(int n_qubits, std::vector<Vertex> mapping);

    int n_qubits_;
    std::vector<Vertex> mapping_;
};

/// Exchanges the bits of qubits k and n; the identity when k == n.
QubitPermutation bit_swap(int n_qubits, int k);

/// Moves every edge and loop along `p`: A(relabel) = P A P^T.
QGraph relabel_graph(const QGraph &g, const QubitPermutation &p);

struct OneQubitOp {
    OneQubitGate gate;
    int position = 1;

    bool operator==(const OneQubitOp &other) const = default;
};

struct CNotLastPair {
    bool operator==(const CNotLastPair &) const = default;
};

/// One circuit element.
using GateOp = std::variant<OneQubitOp, CNotLastPair>;

GateOp gate_at(const OneQubitGate &g, int position);
GateOp cnot_last_pair();

/// Throws PositionOutOfRange / NeedsTwoQubits when `op` cannot act on n qubits.
void validate_op(const GateOp &op, int n_qubits);

std::string op_name(const GateOp &op);

/// Dense 2^n x 2^n unitary of `op`.
DenseMatrix dense_operator(const GateOp &op, int n_qubits, int dense_cap = kDefaultDenseCap);

namespace detail {
void check_position(int n_qubits, int k);

/// Bit mask of qubit k in a vertex label.
inline Vertex qubit_mask(int n_qubits, int k) {
    return Vertex{1} << (n_qubits - k);
}
}  // namespace detail

}  // namespace qgraph

#endif
