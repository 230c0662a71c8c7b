// Copyright 2026 The cvcluster Authors
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

#pragma once

#include "cvcluster/graph.h"
#include "cvcluster/matfun.h"
#include "cvcluster/matrix.h"

namespace cvcluster {

/// Max-norm residuals of the structural identities a generating transform obeys.
struct TransformResiduals {
    double unitarity_real = 0;       // |Re^T Re + Im^T Im - I|
    double unitarity_imag = 0;       // |Re^T Im - Im^T Re|
    double constraint = 0;           // |Im - A Re|
    double gram = 0;                 // |Re Re^T - (I + A^2)^-1|

    double max() const;
};

/// Complex unitary U = Re + i Im that turns n independent y-squeezed modes
/// into the cluster modes of a graph, stored as two real matrices together
/// with the free orthogonal factor it was built from.
class BogoliubovTransform {
   public:
    std::size_t size() const noexcept {
        return static_cast<std::size_t>(re_u_.rows());
    }
    const Matrix &re_u() const noexcept {
        return re_u_;
    }
    const Matrix &im_u() const noexcept {
        return im_u_;
    }
    const OrthogonalMatrix &q() const noexcept {
        return q_;
    }

    /// Residuals against the graph the transform should generate.
    TransformResiduals residuals(const ClusterGraph &g) const;

   private:
    BogoliubovTransform(Matrix re, Matrix im, OrthogonalMatrix q)
        : re_u_(std::move(re)), im_u_(std::move(im)), q_(std::move(q)) {
    }
    friend BogoliubovTransform synthesize_u(const ClusterGraph &g, const OrthogonalMatrix &q);

    Matrix re_u_;
    Matrix im_u_;
    OrthogonalMatrix q_;
};

/// U = (I + iA)(I + A^2)^(-1/2) Q.
///
/// Re U = (I + A^2)^(-1/2) Q and Im U = A Re U. The result is checked against
/// every structural identity at 1e-10 and InvariantViolation is raised if one
/// fails.
BogoliubovTransform synthesize_u(const ClusterGraph &g, const OrthogonalMatrix &q);

/// Same with Q = I, which makes Re U symmetric.
BogoliubovTransform synthesize_u(const ClusterGraph &g);

/// Nullifiers written over the input oscillators: N = x_part x + y_part y.
struct NullifierCoefficients {
    Matrix x_part;  // Im U - A Re U, zero for a valid transform
    Matrix y_part;  // Re U + A Im U = (I + A^2)^(1/2) Q
};

NullifierCoefficients nullifier_coefficients_input_basis(const BogoliubovTransform &t, const ClusterGraph &g);

/// Row j holds N_j = Y_j - sum_i a_ji X_i over (X_1..X_n, Y_1..Y_n): [-A | I].
Matrix nullifier_rows_cluster_basis(const ClusterGraph &g);

namespace tolerance {
inline constexpr double kStructural = 1e-10;
}  // namespace tolerance

}  // namespace cvcluster
