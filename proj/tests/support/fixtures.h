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
#include <random>
#include <string>

#include "cvcluster/graph.h"

namespace cvcluster::testing {

/// 4-node path with unit weights.
inline ClusterGraph fig1a() {
    return validate_adjacency(std::vector<std::vector<double>>{
        {0, 1, 0, 0},
        {1, 0, 1, 0},
        {0, 1, 0, 1},
        {0, 0, 1, 0},
    });
}

/// 6-node graph with weights +-1/2.
inline ClusterGraph fig1b() {
    const double h = 0.5;
    return validate_adjacency(std::vector<std::vector<double>>{
        {0, -h, 0, 0, -h, 0},
        {-h, 0, -h, h, 0, -h},
        {0, -h, 0, 0, h, 0},
        {0, h, 0, 0, h, 0},
        {-h, 0, h, h, 0, h},
        {0, -h, 0, 0, h, 0},
    });
}

inline ClusterGraph empty_graph(std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    return validate_adjacency(Matrix(Matrix::Zero(k, k)));
}

inline ClusterGraph star_graph(std::size_t leaves) {
    const auto k = static_cast<Eigen::Index>(leaves + 1);
    Matrix m = Matrix::Zero(k, k);
    for (Eigen::Index j = 1; j < k; ++j) {
        m(0, j) = 1.0;
        m(j, 0) = 1.0;
    }
    return validate_adjacency(m);
}

/// Edge weight drawn half the time from {-1, -1/2, 1/2, 1} and otherwise uniformly from [-1, 1].
inline double random_weight(std::mt19937_64 &rng) {
    static constexpr double kDyadic[] = {-1.0, -0.5, 0.5, 1.0};
    std::uniform_int_distribution<int> coin(0, 1);
    if (coin(rng) == 0) {
        std::uniform_int_distribution<int> pick(0, 3);
        return kDyadic[pick(rng)];
    }
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    return uniform(rng);
}

/// Random graph on `n` nodes; each pair is an edge with probability `density`.
inline ClusterGraph random_graph(std::mt19937_64 &rng, std::size_t n, double density = 0.5) {
    const auto k = static_cast<Eigen::Index>(n);
    Matrix m = Matrix::Zero(k, k);
    std::bernoulli_distribution edge(density);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = i + 1; j < k; ++j) {
            if (edge(rng)) {
                m(i, j) = m(j, i) = random_weight(rng);
            }
        }
    }
    return validate_adjacency(m);
}

inline std::string data_path(const std::string &name) {
    return std::string(CVCLUSTER_TEST_DATA_DIR) + "/" + name;
}

inline std::string golden_path(const std::string &name) {
    return std::string(CVCLUSTER_GOLDEN_DIR) + "/" + name;
}

}  // namespace cvcluster::testing
