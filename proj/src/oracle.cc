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

#include "qgraph/oracle.h"

#include <Eigen/SparseCore>
#include <string>

#include "qgraph/circuit.h"
#include "qgraph/error.h"

namespace qgraph {

namespace {

using SparseMatrix = Eigen::SparseMatrix<Complex>;

bool mostly_zero(const DenseMatrix &u) {
    Eigen::Index limit = 4 * u.rows();
    Eigen::Index nnz = 0;
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
        for (Eigen::Index i = 0; i < u.rows(); ++i) {
            if (u(i, j) != Complex{} && ++nnz > limit) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

DensityMatrix conjugate_density(const DensityMatrix &rho, const DenseMatrix &u) {
    if (u.rows() != u.cols() || u.rows() != rho.order()) {
        throw Error(ErrorCode::DimensionMismatch, "operator is " + std::to_string(u.rows()) + "x" +
                                                      std::to_string(u.cols()) + ", state has order " +
                                                      std::to_string(rho.order()));
    }
    DenseMatrix id = DenseMatrix::Identity(u.rows(), u.cols());
    // Gate operators have at most two entries per row; exact zeros are skipped.
    if (mostly_zero(u)) {
        SparseMatrix us = u.sparseView(Complex{}, 0.0);
        SparseMatrix uus = us * us.adjoint();
        if (max_abs_diff(DenseMatrix(uus), id) > 1e-10) {
            throw Error(ErrorCode::NotUnitary, "operator is not unitary within 1e-10");
        }
        DenseMatrix left = us * rho.matrix();
        DenseMatrix right = us * left.adjoint();
        return DensityMatrix(right.adjoint());
    }
    if (max_abs_diff(u * u.adjoint(), id) > 1e-10) {
        throw Error(ErrorCode::NotUnitary, "operator is not unitary within 1e-10");
    }
    return DensityMatrix(u * rho.matrix() * u.adjoint());
}

Verdict verify_result(const QGraph &input, const GateOp &op, const QGraph &switched, double tol, int dense_cap) {
    detail::check_same_order(input, switched);
    detail::check_dense_cap(input.n_qubits(), dense_cap);
    DenseMatrix u = dense_operator(op, input.n_qubits(), dense_cap);
    DensityMatrix expected = conjugate_density(density_of(input, dense_cap), u);
    DensityMatrix actual = density_of(switched, dense_cap);
    double dev = max_abs_diff(expected.matrix(), actual.matrix());
    return {dev <= tol, dev};
}

Verdict verify_switch(const QGraph &input, const GateOp &op, double tol, int dense_cap) {
    detail::check_dense_cap(input.n_qubits(), dense_cap);
    return verify_result(input, op, apply_op(input, op), tol, dense_cap);
}

}  // namespace qgraph
