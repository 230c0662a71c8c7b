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

#include "cvcluster/criteria.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "cvcluster/error.h"

namespace cvcluster {

SqueezingLevel::SqueezingLevel(double variance) : variance_(variance) {
    if (!std::isfinite(variance) || !(variance > 0.0)) {
        std::ostringstream ss;
        ss << "squeezing variance must be finite and positive, got " << variance;
        throw Error(ErrorCode::InvalidSqueezing, ss.str());
    }
}

SqueezingLevel SqueezingLevel::from_db(double db) {
    if (!std::isfinite(db)) {
        throw Error(ErrorCode::InvalidSqueezing, "dB value must be finite");
    }
    return SqueezingLevel(kVacuumVariance * std::pow(10.0, db / 10.0));
}

double SqueezingLevel::db() const {
    return 10.0 * std::log10(variance_ / kVacuumVariance);
}

double variance_to_db(const SqueezingLevel &s) {
    return s.db();
}

SqueezingLevel db_to_variance(double db) {
    return SqueezingLevel::from_db(db);
}

std::vector<double> nullifier_variance_coefficients(const ClusterGraph &g) {
    const std::size_t n = g.size();
    std::vector<double> c(n, 1.0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const double a = g.weight(i, j);
            c[j] += a * a;
        }
    }
    return c;
}

std::vector<double> unweighted_coefficients(const ClusterGraph &g) {
    for (const auto &e : g.edges()) {
        if (e.weight != 1.0) {
            std::ostringstream ss;
            ss << "edge (" << e.i << "," << e.j << ") has weight " << e.weight << ", expected 1";
            throw Error(ErrorCode::NotUnweighted, ss.str());
        }
    }
    std::vector<double> c(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        c[j] = 1.0 + static_cast<double>(neighbors(g, NodeId{j}).size());
    }
    return c;
}

std::vector<EdgeBound> edge_bounds(const ClusterGraph &g) {
    const auto c = nullifier_variance_coefficients(g);
    std::vector<EdgeBound> out;
    for (const auto &e : g.edges()) {
        out.push_back({e.i, e.j, std::abs(e.weight) / (c[e.i] + c[e.j])});
    }
    return out;
}

SqueezingThreshold min_squeezing_threshold(const ClusterGraph &g) {
    const auto bounds = edge_bounds(g);
    if (bounds.empty()) {
        throw Error(ErrorCode::NoEdges, "the squeezing threshold is undefined for a graph without edges");
    }
    SqueezingThreshold t{bounds.front().bound, {bounds.front().i, bounds.front().j}, {}};
    for (const auto &b : bounds) {
        if (b.bound < t.value) {
            t.value = b.bound;
            t.argmin_edge = {b.i, b.j};
        }
    }
    // edge_bounds is already in lexicographic order.
    for (const auto &b : bounds) {
        if (b.bound == t.value) {
            t.tied.emplace_back(b.i, b.j);
        }
    }
    return t;
}

std::vector<EdgeVerdict> pairwise_vlf_check(const ClusterGraph &g, const SqueezingLevel &s) {
    const auto c = nullifier_variance_coefficients(g);
    const double v = s.variance();
    std::vector<EdgeVerdict> out;
    for (const auto &e : g.edges()) {
        const double weight_abs = std::abs(e.weight);
        const double denom = c[e.i] + c[e.j];
        // Equivalent to lhs < |a_ij|, but phrased against the same quotient the
        // threshold uses so that v < threshold holds exactly when every edge passes.
        const bool inseparable = v < weight_abs / denom;
        out.push_back({e.i, e.j, denom * v, weight_abs, inseparable});
    }
    return out;
}

VlfOperators nullifier_pair_operators(const ClusterGraph &g, std::size_t i, std::size_t j) {
    const std::size_t n = g.size();
    if (i >= n || j >= n) {
        throw Error(ErrorCode::InvalidNode, "node index out of range");
    }
    VlfOperators ops{std::vector<double>(n), std::vector<double>(n, 0.0), std::vector<double>(n),
                     std::vector<double>(n, 0.0)};
    for (std::size_t k = 0; k < n; ++k) {
        ops.h[k] = -g.weight(i, k);
        ops.h_tilde[k] = -g.weight(j, k);
    }
    ops.g[i] = 1.0;
    ops.g_tilde[j] = 1.0;
    return ops;
}

double vlf_bound(const VlfOperators &ops, const std::vector<std::vector<std::size_t>> &partition) {
    const std::size_t n = ops.h.size();
    if (ops.g.size() != n || ops.h_tilde.size() != n || ops.g_tilde.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, "coefficient vectors must have equal length");
    }
    std::vector<bool> covered(n, false);
    for (const auto &subset : partition) {
        for (std::size_t k : subset) {
            if (k >= n) {
                throw Error(ErrorCode::BadPartition, "index " + std::to_string(k) + " is out of range");
            }
            if (covered[k]) {
                throw Error(ErrorCode::BadPartition, "index " + std::to_string(k) + " appears more than once");
            }
            covered[k] = true;
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (!covered[k]) {
            throw Error(ErrorCode::BadPartition, "index " + std::to_string(k) + " is not covered");
        }
    }

    double total = 0.0;
    for (const auto &subset : partition) {
        double inner = 0.0;
        for (std::size_t k : subset) {
            inner += ops.h[k] * ops.g_tilde[k] - ops.h_tilde[k] * ops.g[k];
        }
        total += std::abs(inner);
    }
    return 0.5 * total;
}

NeighborBudget neighbor_budget(const SqueezingLevel &s) {
    const double bound = 1.0 / s.variance() - 2.0;
    std::int64_t max_sum = 0;
    if (bound >= static_cast<double>(std::numeric_limits<std::int64_t>::max())) {
        max_sum = std::numeric_limits<std::int64_t>::max();
    } else if (bound > 0.0) {
        const double nearest = std::round(bound);
        if (std::abs(bound - nearest) <= 1e-12) {
            max_sum = static_cast<std::int64_t>(nearest) - 1;
        } else {
            max_sum = static_cast<std::int64_t>(std::floor(bound));
        }
    }
    if (max_sum < 0) {
        max_sum = 0;
    }
    // Two adjacent nodes always have a degree sum of at least 2.
    return {bound, max_sum, max_sum >= 2};
}

std::vector<std::size_t> max_demand_nodes(const std::vector<double> &coefficients) {
    std::vector<std::size_t> out;
    if (coefficients.empty()) {
        return out;
    }
    double best = coefficients.front();
    for (double c : coefficients) {
        best = std::max(best, c);
    }
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        if (coefficients[j] == best) {
            out.push_back(j);
        }
    }
    return out;
}

NullifierReport analyze(const ClusterGraph &g, const SqueezingLevel &s) {
    NullifierReport report{nullifier_variance_coefficients(g), {}, std::nullopt, {}, {}, s};
    report.variances.reserve(report.coefficients.size());
    for (double c : report.coefficients) {
        report.variances.push_back(c * s.variance());
    }
    if (g.has_edges()) {
        report.threshold = min_squeezing_threshold(g);
    }
    report.edge_verdicts = pairwise_vlf_check(g, s);
    report.max_demand_nodes = max_demand_nodes(report.coefficients);
    return report;
}

}  // namespace cvcluster
