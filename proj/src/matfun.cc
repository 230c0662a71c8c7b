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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "cvcluster/error.h"

namespace cvcluster {

namespace {

double off_diagonal_norm(const Matrix &a) {
    double sum = 0.0;
    const auto n = a.rows();
    for (Eigen::Index p = 0; p < n; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) {
            sum += 2.0 * a(p, q) * a(p, q);
        }
    }
    return std::sqrt(sum);
}

// Rotation zeroing a(p, q), following the symmetric Schur decomposition in
// Golub & Van Loan. Only rows/columns p and q of `a` change.
void rotate(Matrix &a, Matrix &v, Eigen::Index p, Eigen::Index q) {
    const double apq = a(p, q);
    if (apq == 0.0) {
        return;
    }
    const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const auto n = a.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

// Standard normal draws from the raw 64-bit engine output so that a seed
// reproduces the same matrix under every standard library.
class NormalSource {
   public:
    explicit NormalSource(std::uint64_t seed) : engine_(seed) {
    }

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        constexpr double kTwoPi = 6.283185307179586476925286766559;
        const double u1 = open_unit();
        const double u2 = open_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(kTwoPi * u2);
        has_spare_ = true;
        return r * std::cos(kTwoPi * u2);
    }

   private:
    // Uniform on (0, 1].
    double open_unit() {
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace

SymmetricEigen eig_symmetric(const Matrix &m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "eig_symmetric needs a square matrix");
    }
    const double asym = max_abs(m - m.transpose());
    if (asym > tolerance::kSymmetricInput) {
        std::ostringstream ss;
        ss << "matrix is not symmetric (max |M - M^T| = " << asym << ")";
        throw Error(ErrorCode::NotSymmetric, ss.str());
    }
    const auto n = m.rows();
    Matrix a = 0.5 * (m + m.transpose());
    Matrix v = Matrix::Identity(n, n);

    const double scale = a.norm();
    int sweep = 0;
    while (off_diagonal_norm(a) > tolerance::kJacobiOffDiagonal * scale) {
        if (++sweep > tolerance::kJacobiMaxSweeps) {
            throw Error(ErrorCode::NoConvergence, "Jacobi iteration did not converge in " +
                                                      std::to_string(tolerance::kJacobiMaxSweeps) + " sweeps");
        }
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                rotate(a, v, p, q);
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });

    SymmetricEigen out{Vector(n), Matrix(n, n)};
    for (Eigen::Index k = 0; k < n; ++k) {
        out.eigenvalues(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]);
        out.eigenvectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
    }
    return out;
}

Matrix spd_function(const Matrix &m, const std::function<double(double)> &f) {
    const SymmetricEigen eig = eig_symmetric(m);
    Vector mapped(eig.eigenvalues.size());
    for (Eigen::Index k = 0; k < mapped.size(); ++k) {
        mapped(k) = f(eig.eigenvalues(k));
        if (!std::isfinite(mapped(k))) {
            std::ostringstream ss;
            ss << "function is not finite at eigenvalue " << eig.eigenvalues(k);
            throw Error(ErrorCode::DomainError, ss.str());
        }
    }
    Matrix out = eig.eigenvectors * mapped.asDiagonal() * eig.eigenvectors.transpose();
    return 0.5 * (out + out.transpose());
}

OrthogonalMatrix OrthogonalMatrix::from_matrix(Matrix q) {
    if (q.rows() != q.cols() || q.rows() == 0) {
        throw Error(ErrorCode::DimensionMismatch, "orthogonal matrix must be square and non-empty");
    }
    const double err = max_abs(q * q.transpose() - Matrix::Identity(q.rows(), q.cols()));
    if (err > tolerance::kOrthogonality) {
        std::ostringstream ss;
        ss << "matrix is not orthogonal (max |QQ^T - I| = " << err << ")";
        throw Error(ErrorCode::InvariantViolation, ss.str());
    }
    return OrthogonalMatrix(std::move(q));
}

OrthogonalMatrix OrthogonalMatrix::identity(std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    return OrthogonalMatrix(Matrix::Identity(k, k));
}

OrthogonalMatrix random_orthogonal(std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw Error(ErrorCode::DimensionMismatch, "random_orthogonal needs n >= 1");
    }
    const auto k = static_cast<Eigen::Index>(n);
    NormalSource normal(seed);
    Matrix g(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            g(i, j) = normal.next();
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(k, k);
    const Matrix &r = qr.matrixQR();
    for (Eigen::Index j = 0; j < k; ++j) {
        if (r(j, j) < 0.0) {
            q.col(j) = -q.col(j);
        }
    }
    return OrthogonalMatrix::from_matrix(std::move(q));
}

}  // namespace cvcluster
