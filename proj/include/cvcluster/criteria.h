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
#include <optional>
#include <vector>

#include "cvcluster/graph.h"

namespace cvcluster {

/// Variance of the squeezed y quadrature of every input oscillator.
/// The vacuum variance is 1/4 (from [x, y] = i/2).
class SqueezingLevel {
   public:
    static constexpr double kVacuumVariance = 0.25;

    /// Throws InvalidSqueezing unless `variance` is finite and positive.
    explicit SqueezingLevel(double variance);

    /// Level whose variance is `db` decibels relative to vacuum (negative means squeezed).
    static SqueezingLevel from_db(double db);

    double variance() const noexcept {
        return variance_;
    }
    bool is_squeezed() const noexcept {
        return variance_ < kVacuumVariance;
    }
    /// Conjugate x variance of a minimum-uncertainty state, 1/(16 v).
    double antisqueezed_variance() const noexcept {
        return 1.0 / (16.0 * variance_);
    }
    double db() const;

   private:
    double variance_;
};

/// 10 log10(v / (1/4)).
double variance_to_db(const SqueezingLevel &s);
SqueezingLevel db_to_variance(double db);

/// c_j = 1 + sum_i a_ij^2; the nullifier variance of node j is c_j times the input variance.
std::vector<double> nullifier_variance_coefficients(const ClusterGraph &g);

/// c_j = 1 + |Nb[j]| for graphs whose nonzero weights are all exactly 1.
/// Throws NotUnweighted otherwise.
std::vector<double> unweighted_coefficients(const ClusterGraph &g);

/// Per-edge limit on the input variance: |a_ij| / (c_i + c_j).
struct EdgeBound {
    std::size_t i;
    std::size_t j;
    double bound;
};

std::vector<EdgeBound> edge_bounds(const ClusterGraph &g);

struct SqueezingThreshold {
    double value;                                            // min over edges of the edge bound
    std::pair<std::size_t, std::size_t> argmin_edge;         // lexicographically first minimizer
    std::vector<std::pair<std::size_t, std::size_t>> tied;   // every minimizer, lexicographic
};

/// Largest input variance (exclusive) at which every adjacent pair is inseparable.
/// Throws NoEdges on an edgeless graph.
SqueezingThreshold min_squeezing_threshold(const ClusterGraph &g);

struct EdgeVerdict {
    std::size_t i;
    std::size_t j;
    double lhs;         // <dN_i^2> + <dN_j^2>
    double weight_abs;  // |a_ij|
    bool inseparable;   // lhs < |a_ij|, strictly
};

/// Two-node inseparability test on every edge.
std::vector<EdgeVerdict> pairwise_vlf_check(const ClusterGraph &g, const SqueezingLevel &s);

/// Coefficients of b = sum_k (h_k X_k + g_k Y_k) and c = sum_k (h~_k X_k + g~_k Y_k).
struct VlfOperators {
    std::vector<double> h;
    std::vector<double> g;
    std::vector<double> h_tilde;
    std::vector<double> g_tilde;
};

/// Operators b = N_i, c = N_j for the nullifiers of nodes i and j.
VlfOperators nullifier_pair_operators(const ClusterGraph &g, std::size_t i, std::size_t j);

/// Right-hand side of the multipartite separability inequality
/// <db^2> + <dc^2> >= (1/2) sum_r | sum_{k in S_r} (h_k g~_k - h~_k g_k) |.
///
/// `partition` must cover 0..n-1 exactly once (BadPartition otherwise).
double vlf_bound(const VlfOperators &ops, const std::vector<std::vector<std::size_t>> &partition);

struct NeighborBudget {
    double bound;              // 1/v - 2
    std::int64_t max_degree_sum;  // largest integer strictly below `bound`, at least 0
    bool generable;            // false when no pair of adjacent nodes fits (max_degree_sum < 2)
};

/// Largest admissible degree sum of two adjacent nodes in an unweighted cluster.
NeighborBudget neighbor_budget(const SqueezingLevel &s);

/// Nodes with the largest coefficient, i.e. the ones that demand the most squeezing.
std::vector<std::size_t> max_demand_nodes(const std::vector<double> &coefficients);

struct NullifierReport {
    std::vector<double> coefficients;
    std::vector<double> variances;
    std::optional<SqueezingThreshold> threshold;  // present iff the graph has edges
    std::vector<EdgeVerdict> edge_verdicts;
    std::vector<std::size_t> max_demand_nodes;
    SqueezingLevel squeezing_used;
};

NullifierReport analyze(const ClusterGraph &g, const SqueezingLevel &s);

}  // namespace cvcluster
