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

#include "qgraph/laplacian.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "accumulate.h"
#include "qgraph/error.h"

namespace qgraph {

namespace {

double hermitian_defect(const DenseMatrix &m) {
    return std::sqrt((m - m.adjoint()).cwiseAbs2().maxCoeff());
}

void check_square(const DenseMatrix &m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

int qubits_for_order(Eigen::Index order) {
    int n = 0;
    while ((Eigen::Index{1} << n) < order) {
        ++n;
    }
    if ((Eigen::Index{1} << n) != order || n < 1) {
        throw Error(ErrorCode::InvalidOrder, "matrix order " + std::to_string(order) + " is not 2^n with n >= 1");
    }
    return n;
}

DenseMatrix dense_adjacency(const QGraph &g) {
    auto order = static_cast<Eigen::Index>(g.order());
    DenseMatrix a = DenseMatrix::Zero(order, order);
    for (const Edge &e : g.edges()) {
        a(e.u, e.v) = e.w;
        a(e.v, e.u) = std::conj(e.w);
    }
    for (const Loop &l : g.loops()) {
        a(l.v, l.v) = l.weight;
    }
    return a;
}

}  // namespace

namespace detail {

void check_dense_cap(int n_qubits, int dense_cap) {
    if (n_qubits > dense_cap) {
        throw Error(ErrorCode::TooLarge, std::to_string(n_qubits) + " qubits exceeds the dense limit of " +
                                             std::to_string(dense_cap));
    }
}

}  // namespace detail

SignlessLaplacian::SignlessLaplacian(DenseMatrix entries, double tol) : entries_(std::move(entries)) {
    check_square(entries_);
    if (entries_.size() > 0 && hermitian_defect(entries_) > tol) {
        throw Error(ErrorCode::NotHermitian, "signless Laplacian must be Hermitian");
    }
}

DensityMatrix::DensityMatrix(DenseMatrix entries, double tol) : entries_(std::move(entries)) {
    check_square(entries_);
    if (entries_.size() == 0) {
        throw Error(ErrorCode::DimensionMismatch, "empty density matrix");
    }
    if (hermitian_defect(entries_) > tol) {
        throw Error(ErrorCode::NotHermitian, "density matrix must be Hermitian");
    }
    double tr = entries_.trace().real();
    if (std::abs(tr) <= tol) {
        throw Error(ErrorCode::ZeroTrace, "density matrix has zero trace");
    }
    if (std::abs(tr - 1.0) > tol) {
        throw Error(ErrorCode::NotNormalized, "density matrix trace is " + std::to_string(tr));
    }
}

double DensityMatrix::purity() const {
    return entries_.cwiseAbs2().sum();
}

SignlessLaplacian signless_laplacian(const QGraph &g, int dense_cap) {
    detail::check_dense_cap(g.n_qubits(), dense_cap);
    DenseMatrix l = dense_adjacency(g);
    for (const Loop &lp : g.loops()) {
        l(lp.v, lp.v) = 0.0;
    }
    for (const auto &[v, d] : detail::laplacian_diagonal(g)) {
        l(v, v) = d;
    }
    return SignlessLaplacian(std::move(l), 0.0);
}

DensityMatrix density_of(const QGraph &g, int dense_cap) {
    double tr = g.laplacian_trace();
    if (g.empty() || std::abs(tr) <= kPruneTol) {
        throw Error(ErrorCode::ZeroTrace, "graph has zero Laplacian trace");
    }
    DenseMatrix l = signless_laplacian(g, dense_cap).matrix();
    return DensityMatrix(l / tr);
}

QGraph graph_from_laplacian(const SignlessLaplacian &m, double tol) {
    const DenseMatrix &mat = m.matrix();
    int n = qubits_for_order(mat.rows());
    if (hermitian_defect(mat) > tol) {
        throw Error(ErrorCode::NotHermitian, "cannot extract a graph from a non-Hermitian matrix");
    }
    GraphBuilder b(n);
    std::vector<double> offdiag_sum(static_cast<std::size_t>(mat.rows()), 0.0);
    for (Eigen::Index u = 0; u < mat.rows(); ++u) {
        for (Eigen::Index v = u + 1; v < mat.cols(); ++v) {
            Complex w = snap_weight(0.5 * (mat(u, v) + std::conj(mat(v, u))));
            if (std::abs(w) >= kPruneTol) {
                b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), w);
                offdiag_sum[u] += std::abs(w);
                offdiag_sum[v] += std::abs(w);
            }
        }
    }
    for (Eigen::Index v = 0; v < mat.rows(); ++v) {
        double loop = 0.5 * (mat(v, v).real() - offdiag_sum[v]);
        if (std::abs(loop) >= kPruneTol) {
            b.add_loop(static_cast<Vertex>(v), loop);
        }
    }
    return std::move(b).build();
}

QGraph graph_from_laplacian(const DenseMatrix &m, double tol) {
    check_square(m);
    if (hermitian_defect(m) > tol) {
        throw Error(ErrorCode::NotHermitian, "cannot extract a graph from a non-Hermitian matrix");
    }
    return graph_from_laplacian(SignlessLaplacian(m, tol), tol);
}

double purity(const QGraph &g) {
    double tr = g.laplacian_trace();
    if (g.empty() || std::abs(tr) <= kPruneTol) {
        throw Error(ErrorCode::ZeroTrace, "graph has zero Laplacian trace");
    }
    double sum = 0;
    for (const Edge &e : g.edges()) {
        sum += 2 * std::norm(e.w);
    }
    for (const auto &[v, d] : detail::laplacian_diagonal(g)) {
        sum += d * d;
    }
    return sum / (tr * tr);
}

bool is_pure_graph(const QGraph &g) {
    if (g.empty()) {
        throw Error(ErrorCode::ZeroTrace, "empty graph has no density matrix");
    }
    return (g.num_edges() == 1 && g.num_loops() == 0) || (g.num_edges() == 0 && g.num_loops() == 1);
}

double density_distance(const QGraph &a, const QGraph &b) {
    detail::check_same_order(a, b);
    double ta = a.laplacian_trace();
    double tb = b.laplacian_trace();
    if (a.empty() || b.empty() || std::abs(ta) <= kPruneTol || std::abs(tb) <= kPruneTol) {
        throw Error(ErrorCode::ZeroTrace, "graph has zero Laplacian trace");
    }
    double worst = 0;

    auto ea = a.edges();
    auto eb = b.edges();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ea.size() || j < eb.size()) {
        std::uint64_t ka = i < ea.size() ? detail::edge_key(ea[i].u, ea[i].v) : UINT64_MAX;
        std::uint64_t kb = j < eb.size() ? detail::edge_key(eb[j].u, eb[j].v) : UINT64_MAX;
        Complex x = 0;
        Complex y = 0;
        if (ka <= kb) {
            x = ea[i++].w / ta;
        }
        if (kb <= ka) {
            y = eb[j++].w / tb;
        }
        worst = std::max(worst, std::abs(x - y));
    }

    auto da = detail::laplacian_diagonal(a);
    auto db = detail::laplacian_diagonal(b);
    i = 0;
    j = 0;
    while (i < da.size() || j < db.size()) {
        Vertex va = i < da.size() ? da[i].v : UINT32_MAX;
        Vertex vb = j < db.size() ? db[j].v : UINT32_MAX;
        double x = 0;
        double y = 0;
        if (va <= vb) {
            x = da[i++].value / ta;
        }
        if (vb <= va) {
            y = db[j++].value / tb;
        }
        worst = std::max(worst, std::abs(x - y));
    }
    return worst;
}

bool graphs_equivalent(const QGraph &a, const QGraph &b, double tol) {
    return density_distance(a, b) <= tol;
}

std::vector<double> hermitian_eigenvalues(const DenseMatrix &m) {
    check_square(m);
    if (m.rows() == 0) {
        return {};
    }
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd &ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> adjacency_spectrum(const QGraph &g, int dense_cap) {
    detail::check_dense_cap(g.n_qubits(), dense_cap);
    return hermitian_eigenvalues(dense_adjacency(g));
}

std::vector<double> laplacian_spectrum(const QGraph &g, int dense_cap) {
    return hermitian_eigenvalues(signless_laplacian(g, dense_cap).matrix());
}

double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
    }
    if (a.size() == 0) {
        return 0;
    }
    return std::sqrt((a - b).cwiseAbs2().maxCoeff());
}

}  // namespace qgraph
