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

#include "cvcluster/gaussian_oracle.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cvcluster/error.h"
#include "cvcluster/matfun.h"

namespace cvcluster {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kUncertaintyTol = 1e-10;
constexpr double kModeDeterminantTol = 1e-12;
constexpr double kMinModeDeterminant = 1.0 / 16.0;

void check_covariance(const Matrix &sigma) {
    if (sigma.rows() != sigma.cols() || sigma.rows() == 0 || sigma.rows() % 2 != 0) {
        throw Error(ErrorCode::DimensionMismatch, "covariance matrix must be 2n x 2n with n >= 1");
    }
    const double scale = std::max(1.0, max_abs(sigma));
    if (max_abs(sigma - sigma.transpose()) > kSymmetryTol * scale) {
        throw Error(ErrorCode::InvariantViolation, "covariance matrix is not symmetric");
    }
    const auto n = sigma.rows() / 2;
    for (Eigen::Index k = 0; k < n; ++k) {
        const double xx = sigma(k, k);
        const double yy = sigma(n + k, n + k);
        const double xy = sigma(k, n + k);
        const double det = xx * yy - xy * xy;
        if (det < kMinModeDeterminant - kModeDeterminantTol * std::max(1.0, xx * yy)) {
            std::ostringstream ss;
            ss << "mode " << k << " violates the uncertainty bound (det = " << det << ")";
            throw Error(ErrorCode::InvariantViolation, ss.str());
        }
    }
}

}  // namespace

Matrix canonical_form(std::size_t modes) {
    const auto n = static_cast<Eigen::Index>(modes);
    Matrix j = Matrix::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = Matrix::Identity(n, n);
    j.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
    return j;
}

CovarianceState::CovarianceState(Matrix sigma, Matrix factor) : sigma_(std::move(sigma)), factor_(std::move(factor)) {
    check_covariance(sigma_);
}

CovarianceState CovarianceState::from_matrix(const Matrix &sigma) {
    check_covariance(sigma);
    const SymmetricEigen eig = eig_symmetric(0.5 * (sigma + sigma.transpose()));
    Vector roots(eig.eigenvalues.size());
    for (Eigen::Index k = 0; k < roots.size(); ++k) {
        roots(k) = std::sqrt(std::max(0.0, eig.eigenvalues(k)));
    }
    return CovarianceState(sigma, eig.eigenvectors * roots.asDiagonal());
}

double CovarianceState::uncertainty_min_eigenvalue() const {
    const auto m = sigma_.rows();
    const Matrix k = 0.25 * canonical_form(modes());
    Matrix embedding(2 * m, 2 * m);
    embedding.topLeftCorner(m, m) = sigma_;
    embedding.topRightCorner(m, m) = -k;
    embedding.bottomLeftCorner(m, m) = k;
    embedding.bottomRightCorner(m, m) = sigma_;
    return eig_symmetric(embedding).eigenvalues.minCoeff();
}

bool CovarianceState::satisfies_uncertainty() const {
    return uncertainty_min_eigenvalue() >= -kUncertaintyTol * std::max(1.0, max_abs(sigma_));
}

SymplecticMatrix SymplecticMatrix::from_matrix(Matrix s) {
    if (s.rows() != s.cols() || s.rows() == 0 || s.rows() % 2 != 0) {
        throw Error(ErrorCode::DimensionMismatch, "symplectic matrix must be 2n x 2n with n >= 1");
    }
    const Matrix j = canonical_form(static_cast<std::size_t>(s.rows() / 2));
    const double err = max_abs(s * j * s.transpose() - j);
    if (err > tolerance::kStructural) {
        std::ostringstream ss;
        ss << "matrix is not symplectic (max |S J S^T - J| = " << err << ")";
        throw Error(ErrorCode::InvariantViolation, ss.str());
    }
    return SymplecticMatrix(std::move(s));
}

CovarianceState product_state(std::size_t n, double x_variance, double y_variance) {
    if (n == 0) {
        throw Error(ErrorCode::DimensionMismatch, "a state needs at least one mode");
    }
    if (!(x_variance > 0.0) || !(y_variance > 0.0) || !std::isfinite(x_variance) || !std::isfinite(y_variance)) {
        throw Error(ErrorCode::InvalidSqueezing, "quadrature variances must be finite and positive");
    }
    const auto k = static_cast<Eigen::Index>(n);
    Vector diag(2 * k);
    diag.head(k).setConstant(x_variance);
    diag.tail(k).setConstant(y_variance);
    Matrix sigma = diag.asDiagonal();
    Matrix factor = diag.cwiseSqrt().asDiagonal();
    if (x_variance * y_variance < kMinModeDeterminant - kModeDeterminantTol * std::max(1.0, x_variance * y_variance)) {
        throw Error(ErrorCode::InvalidSqueezing, "x and y variances violate the uncertainty bound");
    }
    return CovarianceState(std::move(sigma), std::move(factor));
}

CovarianceState initial_state(std::size_t n, const SqueezingLevel &s) {
    return product_state(n, s.antisqueezed_variance(), s.variance());
}

SymplecticMatrix symplectic_from_u(const BogoliubovTransform &t) {
    const auto n = static_cast<Eigen::Index>(t.size());
    Matrix s(2 * n, 2 * n);
    s.topLeftCorner(n, n) = t.re_u();
    s.topRightCorner(n, n) = -t.im_u();
    s.bottomLeftCorner(n, n) = t.im_u();
    s.bottomRightCorner(n, n) = t.re_u();
    return SymplecticMatrix::from_matrix(std::move(s));
}

CovarianceState evolve(const CovarianceState &state, const SymplecticMatrix &s) {
    if (state.modes() != s.modes()) {
        throw Error(ErrorCode::DimensionMismatch, "state and symplectic matrix have different mode counts");
    }
    const Matrix &m = s.matrix();
    Matrix sigma = m * state.sigma() * m.transpose();
    sigma = 0.5 * (sigma + sigma.transpose());
    return CovarianceState(std::move(sigma), m * state.factor());
}

double measure_variance(const CovarianceState &state, const Vector &row) {
    if (row.size() != state.sigma().rows()) {
        throw Error(ErrorCode::DimensionMismatch, "measurement row has the wrong length");
    }
    return (state.factor().transpose() * row).squaredNorm();
}

std::vector<double> measure_nullifiers(const ClusterGraph &g, const OrthogonalMatrix &q, const CovarianceState &input) {
    if (input.modes() != g.size()) {
        throw Error(ErrorCode::DimensionMismatch, "input state and graph have different sizes");
    }
    const CovarianceState cluster = evolve(input, symplectic_from_u(synthesize_u(g, q)));
    const Matrix rows = nullifier_rows_cluster_basis(g);
    std::vector<double> out;
    out.reserve(g.size());
    for (Eigen::Index j = 0; j < rows.rows(); ++j) {
        out.push_back(measure_variance(cluster, rows.row(j).transpose()));
    }
    return out;
}

TheoremCheck verify_theorem(const ClusterGraph &g, const SqueezingLevel &s, const OrthogonalMatrix &q) {
    TheoremCheck check{measure_nullifiers(g, q, initial_state(g.size(), s)), {}, 0.0};
    for (double c : nullifier_variance_coefficients(g)) {
        check.formula.push_back(c * s.variance());
    }
    for (std::size_t j = 0; j < check.measured.size(); ++j) {
        const double dev = std::abs(check.measured[j] - check.formula[j]) / check.formula[j];
        check.max_rel_dev = std::max(check.max_rel_dev, dev);
    }
    return check;
}

}  // namespace cvcluster
