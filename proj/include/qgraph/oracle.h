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

#ifndef QGRAPH_ORACLE_H
#define QGRAPH_ORACLE_H

#include "qgraph/graph.h"
#include "qgraph/laplacian.h"
#include "qgraph/operators.h"

namespace qgraph {

/// U rho U^dagger. Throws DimensionMismatch or NotUnitary (checked to 1e-10).
DensityMatrix conjugate_density(const DensityMatrix &rho, const DenseMatrix &u);

struct Verdict {
    bool pass = false;
    double max_abs_deviation = 0;
};

/// Compares rho(switched) with U rho(input) U^dagger for the dense operator of `op`.
Verdict verify_result(const QGraph &input, const GateOp &op, const QGraph &switched, double tol = kCompareTol,
                      int dense_cap = kDefaultDenseCap);

/// verify_result against apply_op(input, op).
Verdict verify_switch(const QGraph &input, const GateOp &op, double tol = kCompareTol,
                      int dense_cap = kDefaultDenseCap);

}  // namespace qgraph

#endif
