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

#include <gtest/gtest.h>

#include <cmath>

#include "cvcluster/error.h"
#include "cvcluster/gaussian_oracle.h"
#include "support/fixtures.h"

using namespace cvcluster;
using cvcluster::testing::fig1a;
using cvcluster::testing::fig1b;

namespace {

Matrix sqrt_one_plus_a2(const ClusterGraph &g) {
    const Matrix &a = g.weights();
    return spd_function(a * a, [](double x) { return std::sqrt(1.0 + x); });
}

void expect_structural_identities(const ClusterGraph &g, const OrthogonalMatrix &q) {
    const BogoliubovTransform t = synthesize_u(g, q);
    const TransformResiduals r = t.residuals(g);
    ASSERT_LE(r.unitarity_real, 1e-10);
    ASSERT_LE(r.unitarity_imag, 1e-10);
    ASSERT_LE(r.constraint, 1e-10);
    ASSERT_LE(r.gram, 1e-10);
    // The polar factor Re U Q^T must come out symmetric.
    const Matrix polar = t.re_u() * q.matrix().transpose();
    ASSERT_LE(max_abs(polar - polar.transpose()), 1e-10);
}

}  // namespace

TEST(synthesize_u, edgeless_graph_gives_identity) {
    for (std::size_t n : {1u, 3u, 6u}) {
        const ClusterGraph g = cvcluster::testing::empty_graph(n);
        const BogoliubovTransform t = synthesize_u(g);
        const auto k = static_cast<Eigen::Index>(n);
        ASSERT_LE(max_abs(t.re_u() - Matrix::Identity(k, k)), 1e-15);
        ASSERT_EQ(max_abs(t.im_u()), 0.0);
    }
}

TEST(synthesize_u, path_with_identity_q) {
    expect_structural_identities(fig1a(), OrthogonalMatrix::identity(4));
    const BogoliubovTransform t = synthesize_u(fig1a());
    ASSERT_LE(max_abs(t.re_u() - t.re_u().transpose()), 1e-12);
    ASSERT_TRUE((t.q().matrix().array() == Matrix::Identity(4, 4).array()).all());
}

TEST(synthesize_u, weighted_graph_with_random_q) {
    expect_structural_identities(fig1b(), random_orthogonal(6, 7));
}

TEST(synthesize_u, identities_hold_on_random_graphs) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
        const ClusterGraph g = cvcluster::testing::random_graph(rng, n);
        const OrthogonalMatrix q =
            trial % 2 == 0 ? OrthogonalMatrix::identity(n) : random_orthogonal(n, static_cast<std::uint64_t>(trial));
        expect_structural_identities(g, q);
    }
}

TEST(synthesize_u, complete_graph_of_unit_weights) {
    const Eigen::Index n = 12;
    Matrix m = Matrix::Ones(n, n) - Matrix::Identity(n, n);
    expect_structural_identities(validate_adjacency(m), random_orthogonal(12, 1));
}

TEST(synthesize_u, dimension_mismatch) {
    try {
        synthesize_u(fig1a(), OrthogonalMatrix::identity(3));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(nullifier_coefficients_input_basis, edgeless) {
    const ClusterGraph g = cvcluster::testing::empty_graph(3);
    const NullifierCoefficients c = nullifier_coefficients_input_basis(synthesize_u(g), g);
    ASSERT_EQ(max_abs(c.x_part), 0.0);
    ASSERT_LE(max_abs(c.y_part - Matrix::Identity(3, 3)), 1e-15);
}

TEST(nullifier_coefficients_input_basis, path_matches_square_root) {
    const ClusterGraph g = fig1a();
    const NullifierCoefficients c = nullifier_coefficients_input_basis(synthesize_u(g), g);
    ASSERT_LE(max_abs(c.y_part - sqrt_one_plus_a2(g)), 1e-10);
    ASSERT_LE(max_abs(c.y_part - c.y_part.transpose()), 1e-10);
    ASSERT_LE(max_abs(c.x_part), 1e-10);
}

TEST(nullifier_coefficients_input_basis, stretched_quadratures_cancel) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
        const ClusterGraph g = cvcluster::testing::random_graph(rng, n);
        const OrthogonalMatrix q = random_orthogonal(n, static_cast<std::uint64_t>(1000 + trial));
        const NullifierCoefficients c = nullifier_coefficients_input_basis(synthesize_u(g, q), g);
        ASSERT_LE(max_abs(c.x_part), 1e-10);
        ASSERT_LE(max_abs(c.y_part - sqrt_one_plus_a2(g) * q.matrix()), 1e-10);
    }
}

TEST(nullifier_coefficients_input_basis, dimension_mismatch) {
    ASSERT_THROW(nullifier_coefficients_input_basis(synthesize_u(fig1a()), fig1b()), Error);
}

TEST(nullifier_rows_cluster_basis, path_row_zero) {
    const Matrix rows = nullifier_rows_cluster_basis(fig1a());
    ASSERT_EQ(rows.rows(), 4);
    ASSERT_EQ(rows.cols(), 8);
    const double expected[] = {0, -1, 0, 0, 1, 0, 0, 0};
    for (Eigen::Index k = 0; k < 8; ++k) {
        ASSERT_EQ(rows(0, k), expected[k]);
    }
}

TEST(nullifier_rows_cluster_basis, edgeless) {
    const Matrix rows = nullifier_rows_cluster_basis(cvcluster::testing::empty_graph(3));
    ASSERT_EQ(max_abs(rows.leftCols(3)), 0.0);
    ASSERT_TRUE((rows.rightCols(3).array() == Matrix::Identity(3, 3).array()).all());
}

TEST(nullifier_rows_cluster_basis, weighted_row_one) {
    const Matrix rows = nullifier_rows_cluster_basis(fig1b());
    const double x_expected[] = {0.5, 0, 0.5, -0.5, 0, 0.5};
    for (Eigen::Index k = 0; k < 6; ++k) {
        ASSERT_EQ(rows(1, k), x_expected[k]);
        ASSERT_EQ(rows(1, 6 + k), k == 1 ? 1.0 : 0.0);
    }
}

TEST(nullifier_rows_cluster_basis, composes_with_quadrature_transform) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
        const ClusterGraph g = cvcluster::testing::random_graph(rng, n);
        const BogoliubovTransform t = synthesize_u(g, random_orthogonal(n, static_cast<std::uint64_t>(trial)));
        const Matrix composed = nullifier_rows_cluster_basis(g) * symplectic_from_u(t).matrix();
        const NullifierCoefficients c = nullifier_coefficients_input_basis(t, g);
        const auto k = static_cast<Eigen::Index>(n);
        ASSERT_LE(max_abs(composed.leftCols(k) - c.x_part), 1e-10);
        ASSERT_LE(max_abs(composed.rightCols(k) - c.y_part), 1e-10);
    }
}
