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

#include <vector>

#include "cvcluster/bogoliubov.h"
#include "cvcluster/criteria.h"
#include "cvcluster/graph.h"
#include "cvcluster/matrix.h"

// Direct Gaussian simulation of cluster generation. Nothing here uses the
// closed-form variance coefficients except verify_theorem, which compares
// against them.

namespace cvcluster {

class SymplecticMatrix;

/// [[0, I], [-I, 0]] of size 2n. The quadrature commutators are (i/2) times this.
Matrix canonical_form(std::size_t modes);

/// Covariance matrix of n zero-mean Gaussian modes, ordered (x_1..x_n, y_1..y_n),
/// sigma_ij = <dq_i dq_j + dq_j dq_i> / 2, vacuum = diag(1/4).
///
/// A square-root factor L with sigma = L L^T is carried alongside sigma and
/// variances are contracted through it. Forming sigma explicitly mixes the
/// huge antisqueezed and tiny squeezed contributions, and their cancellation
/// would lose most of the significant digits of a strongly squeezed nullifier.
class CovarianceState {
   public:
    /// Validates symmetry and the single-mode uncertainty bound; the factor is
    /// taken from an eigendecomposition.
    static CovarianceState from_matrix(const Matrix &sigma);

    std::size_t modes() const noexcept {
        return static_cast<std::size_t>(sigma_.rows() / 2);
    }
    const Matrix &sigma() const noexcept {
        return sigma_;
    }
    const Matrix &factor() const noexcept {
        return factor_;
    }

    /// Smallest eigenvalue of the real embedding of sigma + (i/4) J.
    /// Non-negative (up to rounding) for every physical state.
    double uncertainty_min_eigenvalue() const;
    bool satisfies_uncertainty() const;

   private:
    CovarianceState(Matrix sigma, Matrix factor);
    friend CovarianceState product_state(std::size_t n, double x_variance, double y_variance);
    friend CovarianceState evolve(const CovarianceState &state, const SymplecticMatrix &s);

    Matrix sigma_;
    Matrix factor_;
};

/// Real 2n x 2n matrix with S J S^T = J to within 1e-10.
class SymplecticMatrix {
   public:
    /// Throws InvariantViolation if the symplectic condition fails.
    static SymplecticMatrix from_matrix(Matrix s);

    std::size_t modes() const noexcept {
        return static_cast<std::size_t>(s_.rows() / 2);
    }
    const Matrix &matrix() const noexcept {
        return s_;
    }

   private:
    explicit SymplecticMatrix(Matrix s) : s_(std::move(s)) {
    }
    Matrix s_;
};

/// n uncorrelated modes with the given x and y variances. Throws
/// InvalidSqueezing if x_variance * y_variance < 1/16.
CovarianceState product_state(std::size_t n, double x_variance, double y_variance);

/// n minimum-uncertainty modes squeezed in y: x variance 1/(16 v), y variance v.
CovarianceState initial_state(std::size_t n, const SqueezingLevel &s);

/// Phase-space image [[Re U, -Im U], [Im U, Re U]] of the mode transform.
SymplecticMatrix symplectic_from_u(const BogoliubovTransform &t);

/// sigma -> S sigma S^T.
CovarianceState evolve(const CovarianceState &state, const SymplecticMatrix &s);

/// Variance of sum_k row_k q_k, i.e. row^T sigma row.
double measure_variance(const CovarianceState &state, const Vector &row);

/// Variances of every nullifier of `g` after generating the cluster from
/// `input` with the transform synthesized from (g, q).
std::vector<double> measure_nullifiers(const ClusterGraph &g, const OrthogonalMatrix &q, const CovarianceState &input);

struct TheoremCheck {
    std::vector<double> measured;
    std::vector<double> formula;
    double max_rel_dev;
};

/// Simulated nullifier variances against the closed-form prediction.
TheoremCheck verify_theorem(const ClusterGraph &g, const SqueezingLevel &s, const OrthogonalMatrix &q);

}  // namespace cvcluster
