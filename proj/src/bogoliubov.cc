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

#include "cvcluster/bogoliubov.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cvcluster/error.h"

namespace cvcluster {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        std::ostringstream ss;
        ss << what << ": dimension " << a << " does not match graph size " << b;
        throw Error(ErrorCode::DimensionMismatch, ss.str());
    }
}

}  // namespace

double TransformResiduals::max() const {
    return std::max({unitarity_real, unitarity_imag, constraint, gram});
}

TransformResiduals BogoliubovTransform::residuals(const ClusterGraph &g) const {
    require_same_size(size(), g.size(), "transform");
    const Matrix &a = g.weights();
    const auto n = a.rows();
    const Matrix id = Matrix::Identity(n, n);
    const Matrix gram_target = spd_function(a * a, [](double x) { return 1.0 / (1.0 + x); });

    TransformResiduals r;
    r.unitarity_real = max_abs(re_u_.transpose() * re_u_ + im_u_.transpose() * im_u_ - id);
    r.unitarity_imag = max_abs(re_u_.transpose() * im_u_ - im_u_.transpose() * re_u_);
    r.constraint = max_abs(im_u_ - a * re_u_);
    r.gram = max_abs(re_u_ * re_u_.transpose() - gram_target);
    return r;
}

BogoliubovTransform synthesize_u(const ClusterGraph &g, const OrthogonalMatrix &q) {
    require_same_size(q.size(), g.size(), "orthogonal factor");
    const Matrix &a = g.weights();
    const Matrix polar = spd_function(a * a, [](double x) { return 1.0 / std::sqrt(1.0 + x); });
    Matrix re = polar * q.matrix();
    Matrix im = a * re;
    BogoliubovTransform t(std::move(re), std::move(im), q);

    const TransformResiduals r = t.residuals(g);
    if (r.max() > tolerance::kStructural) {
        std::ostringstream ss;
        ss << "synthesized transform violates a structural identity (max residual " << r.max() << ")";
        throw Error(ErrorCode::InvariantViolation, ss.str());
    }
    return t;
}

BogoliubovTransform synthesize_u(const ClusterGraph &g) {
    return synthesize_u(g, OrthogonalMatrix::identity(g.size()));
}

NullifierCoefficients nullifier_coefficients_input_basis(const BogoliubovTransform &t, const ClusterGraph &g) {
    require_same_size(t.size(), g.size(), "transform");
    const Matrix &a = g.weights();
    return {t.im_u() - a * t.re_u(), t.re_u() + a * t.im_u()};
}

Matrix nullifier_rows_cluster_basis(const ClusterGraph &g) {
    const auto n = static_cast<Eigen::Index>(g.size());
    Matrix rows(n, 2 * n);
    rows.leftCols(n) = -g.weights();
    rows.rightCols(n) = Matrix::Identity(n, n);
    return rows;
}

}  // namespace cvcluster
