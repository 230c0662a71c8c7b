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

#include "cvcluster/matfun.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cvcluster/error.h"
#include "support/fixtures.h"

using namespace cvcluster;

namespace {

Matrix random_symmetric(std::mt19937_64 &rng, Eigen::Index n, double scale = 1.0) {
    std::normal_distribution<double> normal(0.0, scale);
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            m(i, j) = m(j, i) = normal(rng);
        }
    }
    return m;
}

// Roots of the characteristic polynomial of the 4-node path, by bisection.
std::vector<double> path4_spectrum_by_bisection() {
    auto p = [](double x) { return x * x * x * x - 3.0 * x * x + 1.0; };
    std::vector<double> roots;
    const double brackets[][2] = {{-2.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}, {1.0, 2.0}};
    for (const auto &b : brackets) {
        double lo = b[0];
        double hi = b[1];
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            if ((p(lo) < 0) == (p(mid) < 0)) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push_back(0.5 * (lo + hi));
    }
    return roots;
}

void expect_decomposition_contract(const Matrix &m) {
    const SymmetricEigen e = eig_symmetric(m);
    const auto n = m.rows();
    ASSERT_LE(max_abs(e.eigenvectors * e.eigenvalues.asDiagonal() * e.eigenvectors.transpose() - m),
              1e-10 * std::max(1.0, max_abs(m)));
    ASSERT_LE(max_abs(e.eigenvectors.transpose() * e.eigenvectors - Matrix::Identity(n, n)), 1e-12);
    for (Eigen::Index k = 1; k < n; ++k) {
        ASSERT_LE(e.eigenvalues(k - 1), e.eigenvalues(k));
    }
}

}  // namespace

TEST(eig_symmetric, identity) {
    const SymmetricEigen e = eig_symmetric(Matrix::Identity(3, 3));
    for (Eigen::Index k = 0; k < 3; ++k) {
        ASSERT_EQ(e.eigenvalues(k), 1.0);
    }
}

TEST(eig_symmetric, diagonal_input_sorted) {
    Matrix m = Vector::Map(std::vector<double>{3, 1, 2}.data(), 3).asDiagonal();
    const SymmetricEigen e = eig_symmetric(m);
    ASSERT_EQ(e.eigenvalues(0), 1.0);
    ASSERT_EQ(e.eigenvalues(1), 2.0);
    ASSERT_EQ(e.eigenvalues(2), 3.0);
}

TEST(eig_symmetric, path_spectrum_matches_bisection) {
    const auto expected = path4_spectrum_by_bisection();
    const SymmetricEigen e = eig_symmetric(cvcluster::testing::fig1a().weights());
    for (std::size_t k = 0; k < 4; ++k) {
        ASSERT_NEAR(e.eigenvalues(static_cast<Eigen::Index>(k)), expected[k], 1e-12);
        ASSERT_NEAR(expected[k], 2.0 * std::cos(static_cast<double>(4 - k) * M_PI / 5.0), 1e-12);
    }
    ASSERT_NEAR(e.eigenvalues(3), (1.0 + std::sqrt(5.0)) / 2.0, 1e-12);
}

TEST(eig_symmetric, contract_on_random_matrices) {
    std::mt19937_64 rng(1);
    for (Eigen::Index n : {1, 2, 3, 5, 8, 13, 40}) {
        for (int trial = 0; trial < 5; ++trial) {
            expect_decomposition_contract(random_symmetric(rng, n, trial + 1.0));
        }
    }
    expect_decomposition_contract(Matrix::Zero(4, 4));
}

TEST(eig_symmetric, agrees_with_eigen_library) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix m = random_symmetric(rng, 1 + trial % 12);
        Eigen::SelfAdjointEigenSolver<Matrix> reference(m);
        const SymmetricEigen e = eig_symmetric(m);
        ASSERT_LE((e.eigenvalues - reference.eigenvalues()).cwiseAbs().maxCoeff(), 1e-12 * std::max(1.0, max_abs(m)));
    }
}

TEST(eig_symmetric, permutation_invariant_spectrum) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index n = 2 + trial % 8;
        Matrix m = random_symmetric(rng, n);
        Eigen::VectorXi perm(n);
        for (Eigen::Index k = 0; k < n; ++k) {
            perm(k) = static_cast<int>(k);
        }
        std::shuffle(perm.data(), perm.data() + n, rng);
        Eigen::PermutationMatrix<Eigen::Dynamic> p(perm);
        Matrix permuted = p * m * p.transpose();
        ASSERT_LE((eig_symmetric(m).eigenvalues - eig_symmetric(permuted).eigenvalues).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(eig_symmetric, deterministic) {
    std::mt19937_64 rng(4);
    Matrix m = random_symmetric(rng, 7);
    const SymmetricEigen a = eig_symmetric(m);
    const SymmetricEigen b = eig_symmetric(m);
    ASSERT_TRUE((a.eigenvalues.array() == b.eigenvalues.array()).all());
    ASSERT_TRUE((a.eigenvectors.array() == b.eigenvectors.array()).all());
}

TEST(eig_symmetric, rejects_asymmetric_input) {
    Matrix m(2, 2);
    m << 0, 1, 1 + 1e-9, 0;
    try {
        eig_symmetric(m);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.code(), ErrorCode::NotSymmetric);
    }
    m(1, 0) = 1 + 1e-14;
    ASSERT_NO_THROW(eig_symmetric(m));
}

TEST(spd_function, square_matches_product) {
    const Matrix a = cvcluster::testing::fig1a().weights();
    ASSERT_LE(max_abs(spd_function(a, [](double x) { return x * x; }) - a * a), 1e-12);
}

TEST(spd_function, inverse_root_of_identity) {
    const Matrix a = Matrix::Zero(3, 3);
    const Matrix w = spd_function(a * a, [](double x) { return 1.0 / std::sqrt(1.0 + x); });
    ASSERT_LE(max_abs(w - Matrix::Identity(3, 3)), 1e-15);
}

TEST(spd_function, inverse_root_defining_identity) {
    for (const Matrix &a : {cvcluster::testing::fig1a().weights(), cvcluster::testing::fig1b().weights()}) {
        const auto n = a.rows();
        const Matrix m = Matrix::Identity(n, n) + a * a;
        const Matrix w = spd_function(a * a, [](double x) { return 1.0 / std::sqrt(1.0 + x); });
        ASSERT_LE(max_abs(w * m * w - Matrix::Identity(n, n)), 1e-10);
        ASSERT_LE(max_abs(w - w.transpose()), 1e-12);
        ASSERT_LE(max_abs(w * m - m * w), 1e-10);
    }
}

TEST(spd_function, identity_and_square_root_properties) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 40; ++trial) {
        const Eigen::Index n = 1 + trial % 9;
        const Matrix m = random_symmetric(rng, n);
        ASSERT_LE(max_abs(spd_function(m, [](double x) { return x; }) - m), 1e-12);

        const Matrix b = random_symmetric(rng, n);
        const Matrix psd = b * b.transpose() + 0.1 * Matrix::Identity(n, n);
        const Matrix root = spd_function(psd, [](double x) { return std::sqrt(x); });
        ASSERT_LE(max_abs(root * root - psd), 1e-10 * std::max(1.0, max_abs(psd)));
    }
}

TEST(spd_function, domain_error) {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    try {
        spd_function(m, [](double x) { return std::sqrt(x); });
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.code(), ErrorCode::DomainError);
        ASSERT_FALSE(is_input_error(e.code()));
    }
}

TEST(random_orthogonal, one_by_one) {
    for (std::uint64_t seed : {0u, 1u, 99u}) {
        const double q = random_orthogonal(1, seed).matrix()(0, 0);
        ASSERT_TRUE(q == 1.0 || q == -1.0);
    }
}

TEST(random_orthogonal, orthogonal_and_deterministic) {
    for (std::size_t n : {2u, 5u, 9u, 30u}) {
        const OrthogonalMatrix q = random_orthogonal(n, 42);
        const auto k = static_cast<Eigen::Index>(n);
        ASSERT_LE(max_abs(q.matrix() * q.matrix().transpose() - Matrix::Identity(k, k)), 1e-12);
        ASSERT_TRUE((q.matrix().array() == random_orthogonal(n, 42).matrix().array()).all());
    }
}

TEST(random_orthogonal, seeds_differ) {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const Matrix a = random_orthogonal(5, 2 * s).matrix();
        const Matrix b = random_orthogonal(5, 2 * s + 1).matrix();
        ASSERT_GT(max_abs(a - b), 1e-6);
    }
}

TEST(random_orthogonal, haar_moments) {
    // For Haar Q in O(n): E[q_00] = 0 and E[q_00^2] = 1/n.
    const std::size_t n = 4;
    const int samples = 4000;
    double mean = 0.0;
    double second = 0.0;
    for (int s = 0; s < samples; ++s) {
        const double q = random_orthogonal(n, static_cast<std::uint64_t>(s)).matrix()(0, 0);
        mean += q;
        second += q * q;
    }
    mean /= samples;
    second /= samples;
    ASSERT_NEAR(mean, 0.0, 0.03);
    ASSERT_NEAR(second, 1.0 / n, 0.02);
}

TEST(orthogonal_matrix, from_matrix_checks) {
    Matrix rot(2, 2);
    rot << std::cos(0.3), -std::sin(0.3), std::sin(0.3), std::cos(0.3);
    ASSERT_NO_THROW(OrthogonalMatrix::from_matrix(rot));
    rot(0, 0) += 1e-9;
    ASSERT_THROW(OrthogonalMatrix::from_matrix(rot), Error);
    ASSERT_THROW(OrthogonalMatrix::from_matrix(Matrix::Identity(2, 3)), Error);
}
