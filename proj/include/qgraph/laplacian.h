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

#ifndef QGRAPH_LAPLACIAN_H
#define QGRAPH_LAPLACIAN_H

#include <Eigen/Dense>
#include <vector>

#include "qgraph/graph.h"

namespace qgraph {

using DenseMatrix = Eigen::MatrixXcd;

/// L(G) = D(G) + A(G) as a dense Hermitian matrix.
class SignlessLaplacian {
   public:
    /// Wraps an existing matrix; throws NotHermitian if it is not square and
    /// Hermitian within `tol`.
    explicit SignlessLaplacian(DenseMatrix entries, double tol = kCompareTol);

    const DenseMatrix &matrix() const noexcept {
        return entries_;
    }
    Eigen::Index order() const noexcept {
        return entries_.rows();
    }
    double trace() const {
        return entries_.trace().real();
    }

   private:
    DenseMatrix entries_;
};

/// Unit-trace positive semidefinite Hermitian matrix.
class DensityMatrix {
   public:
    /// Throws NotHermitian or ZeroTrace when `entries` is not a valid state
    /// within `tol`.
    explicit DensityMatrix(DenseMatrix entries, double tol = kCompareTol);

    const DenseMatrix &matrix() const noexcept {
        return entries_;
    }
    Eigen::Index order() const noexcept {
        return entries_.rows();
    }
    /// tr(rho^2).
    double purity() const;

   private:
    DenseMatrix entries_;
};

/// Off-diagonal L(u, v) = A(u, v). Diagonal L(v, v) = sum_{u != v} |w_vu| + 2 loop(v),
/// which agrees with d_v + a_vv for nonnegative loops and stays a two-sided
/// inverse of graph_from_laplacian when loops are negative.
SignlessLaplacian signless_laplacian(const QGraph &g, int dense_cap = kDefaultDenseCap);

/// rho(G) = L(G) / tr L(G). Throws ZeroTrace for an empty graph.
DensityMatrix density_of(const QGraph &g, int dense_cap = kDefaultDenseCap);

/// Canonical graph whose signless Laplacian is `m`. Edges below kPruneTol are
/// dropped; loop(v) = (M(v, v) - sum_{u != v} |M(v, u)|) / 2.
QGraph graph_from_laplacian(const SignlessLaplacian &m, double tol = kCompareTol);
QGraph graph_from_laplacian(const DenseMatrix &m, double tol = kCompareTol);

/// tr(rho(G)^2) evaluated on the sparse representation.
double purity(const QGraph &g);

/// Exactly one edge and no loops, or exactly one loop and no edges.
/// Throws ZeroTrace for an empty graph.
bool is_pure_graph(const QGraph &g);

/// Max entrywise distance between rho(a) and rho(b), computed sparsely.
double density_distance(const QGraph &a, const QGraph &b);

/// density_distance(a, b) <= tol.
bool graphs_equivalent(const QGraph &a, const QGraph &b, double tol = kCompareTol);

/// Ascending eigenvalues of A(G), with a_vv = loop(v).
std::vector<double> adjacency_spectrum(const QGraph &g, int dense_cap = kDefaultDenseCap);
/// Ascending eigenvalues of L(G).
std::vector<double> laplacian_spectrum(const QGraph &g, int dense_cap = kDefaultDenseCap);

/// Ascending eigenvalues of a Hermitian matrix.
std::vector<double> hermitian_eigenvalues(const DenseMatrix &m);

/// Max entrywise |a - b|. Throws DimensionMismatch on shape mismatch.
double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b);

namespace detail {
void check_dense_cap(int n_qubits, int dense_cap);
}

}  // namespace qgraph

#endif
