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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cvcluster/matrix.h"

namespace cvcluster {

/// Zero-based node index. Node k here is node k+1 in the usual one-based notation.
struct NodeId {
    std::size_t index;

    bool operator==(const NodeId &) const = default;
    auto operator<=>(const NodeId &) const = default;
};

/// An edge (i, j) with i < j and a nonzero weight.
struct Edge {
    std::size_t i;
    std::size_t j;
    double weight;

    bool operator==(const Edge &) const = default;
};

/// Weighted undirected graph of a cluster state.
///
/// The adjacency matrix is symmetric, has a zero diagonal and every weight lies
/// in [-1, 1]. Instances can only be obtained through validate_adjacency (or
/// the parsers that delegate to it), so the invariants always hold.
class ClusterGraph {
   public:
    std::size_t size() const noexcept {
        return static_cast<std::size_t>(weights_.rows());
    }
    const Matrix &weights() const noexcept {
        return weights_;
    }
    double weight(std::size_t i, std::size_t j) const {
        return weights_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }

    /// Edges in lexicographic (i, j) order, i < j.
    std::vector<Edge> edges() const;
    bool has_edges() const;

    /// Optional label carried by the JSON format. Not part of equality.
    const std::string &name() const noexcept {
        return name_;
    }
    void set_name(std::string name) {
        name_ = std::move(name);
    }

    /// Exact equality of the weight matrices.
    bool operator==(const ClusterGraph &other) const;

   private:
    explicit ClusterGraph(Matrix weights) : weights_(std::move(weights)) {
    }
    friend ClusterGraph validate_adjacency(const Matrix &raw);

    Matrix weights_;
    std::string name_;
};

/// Checks the adjacency invariants with exact comparisons and returns a graph
/// holding a bit-identical copy of `raw`.
ClusterGraph validate_adjacency(const Matrix &raw);

/// Row-major nested-vector convenience overload; ragged input is NotSquare.
ClusterGraph validate_adjacency(const std::vector<std::vector<double>> &rows);

/// { i : weights[j][i] != 0 }, ascending.
std::vector<NodeId> neighbors(const ClusterGraph &g, NodeId j);

enum class GraphFormat { json, edgelist };

/// Picks the format from a file name: ".json" is JSON, everything else is an edge list.
GraphFormat format_from_path(std::string_view path);

ClusterGraph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const ClusterGraph &g, GraphFormat format);

}  // namespace cvcluster
