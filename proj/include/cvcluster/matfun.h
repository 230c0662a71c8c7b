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

#include <cstdint>
#include <functional>

#include "cvcluster/matrix.h"

namespace cvcluster {

/// Eigenpairs of a real symmetric matrix, eigenvalues ascending.
struct SymmetricEigen {
    Vector eigenvalues;
    Matrix eigenvectors;  // column k pairs with eigenvalues[k]
};

/// Cyclic Jacobi eigensolver.
///
/// The input must be symmetric to within 1e-12 absolute; it is symmetrized
/// before iterating. Sweeps stop once the off-diagonal Frobenius norm falls
/// below 1e-14 of the matrix norm; more than 100 sweeps raises NoConvergence.
/// The result is a deterministic function of the input bits.
SymmetricEigen eig_symmetric(const Matrix &m);

/// V f(diag(lambda)) V^T for symmetric `m`.
///
/// Throws DomainError if `f` produces a non-finite value on any eigenvalue,
/// which is how a negative argument to a square root shows up.
Matrix spd_function(const Matrix &m, const std::function<double(double)> &f);

/// Square real matrix with Q Q^T = I to within 1e-12.
class OrthogonalMatrix {
   public:
    /// Throws InvariantViolation if `q` is not square or not orthogonal.
    static OrthogonalMatrix from_matrix(Matrix q);
    static OrthogonalMatrix identity(std::size_t n);

    std::size_t size() const noexcept {
        return static_cast<std::size_t>(q_.rows());
    }
    const Matrix &matrix() const noexcept {
        return q_;
    }

   private:
    explicit OrthogonalMatrix(Matrix q) : q_(std::move(q)) {
    }
    Matrix q_;
};

/// Haar-distributed orthogonal matrix, deterministic in `seed`.
///
/// A standard-normal matrix is QR-factored and each column of the orthogonal
/// factor is flipped so that the triangular factor has a positive diagonal.
OrthogonalMatrix random_orthogonal(std::size_t n, std::uint64_t seed);

namespace tolerance {
inline constexpr double kSymmetricInput = 1e-12;
inline constexpr double kReconstruction = 1e-10;
inline constexpr double kOrthogonality = 1e-12;
inline constexpr double kJacobiOffDiagonal = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;
}  // namespace tolerance

}  // namespace cvcluster
