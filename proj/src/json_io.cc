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

#include "cvcluster/json_io.h"

namespace cvcluster {

namespace {

OrderedJson edge_pair(std::size_t i, std::size_t j) {
    return OrderedJson::array({i, j});
}

}  // namespace

OrderedJson matrix_to_json(const Matrix &m) {
    OrderedJson rows = OrderedJson::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        OrderedJson row = OrderedJson::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

OrderedJson to_json(const BogoliubovTransform &t) {
    OrderedJson doc;
    doc["n"] = t.size();
    doc["re"] = matrix_to_json(t.re_u());
    doc["im"] = matrix_to_json(t.im_u());
    doc["q"] = matrix_to_json(t.q().matrix());
    return doc;
}

OrderedJson to_json(const SqueezingLevel &s) {
    OrderedJson doc;
    doc["variance"] = s.variance();
    doc["db"] = s.db();
    return doc;
}

OrderedJson to_json(const NullifierReport &r) {
    OrderedJson doc;
    doc["coefficients"] = r.coefficients;
    doc["variances"] = r.variances;
    if (r.threshold) {
        doc["threshold"] = r.threshold->value;
        doc["threshold_db"] = SqueezingLevel(r.threshold->value).db();
        doc["argmin_edge"] = edge_pair(r.threshold->argmin_edge.first, r.threshold->argmin_edge.second);
        OrderedJson tied = OrderedJson::array();
        for (const auto &[i, j] : r.threshold->tied) {
            tied.push_back(edge_pair(i, j));
        }
        doc["tied_edges"] = std::move(tied);
    }
    doc["max_demand_nodes"] = r.max_demand_nodes;
    OrderedJson edges = OrderedJson::array();
    for (const auto &v : r.edge_verdicts) {
        OrderedJson e;
        e["i"] = v.i;
        e["j"] = v.j;
        e["lhs"] = v.lhs;
        e["weight_abs"] = v.weight_abs;
        e["inseparable"] = v.inseparable;
        edges.push_back(std::move(e));
    }
    doc["edges"] = std::move(edges);
    doc["squeezing"] = to_json(r.squeezing_used);
    return doc;
}

OrderedJson threshold_to_json(const SqueezingThreshold &t, const std::vector<EdgeBound> &candidates) {
    OrderedJson doc;
    doc["threshold"] = t.value;
    doc["threshold_db"] = SqueezingLevel(t.value).db();
    doc["argmin_edge"] = edge_pair(t.argmin_edge.first, t.argmin_edge.second);
    OrderedJson tied = OrderedJson::array();
    for (const auto &[i, j] : t.tied) {
        tied.push_back(edge_pair(i, j));
    }
    doc["tied_edges"] = std::move(tied);
    OrderedJson cands = OrderedJson::array();
    for (const auto &b : candidates) {
        OrderedJson c;
        c["i"] = b.i;
        c["j"] = b.j;
        c["bound"] = b.bound;
        cands.push_back(std::move(c));
    }
    doc["candidates"] = std::move(cands);
    return doc;
}

OrderedJson to_json(const NeighborBudget &b, const SqueezingLevel &s) {
    OrderedJson doc;
    doc["squeezing"] = to_json(s);
    doc["bound"] = b.bound;
    doc["max_degree_sum"] = b.max_degree_sum;
    doc["generable"] = b.generable;
    return doc;
}

OrderedJson to_json(const TheoremCheck &c, const OrthogonalMatrix &q) {
    OrderedJson doc;
    doc["measured"] = c.measured;
    doc["formula"] = c.formula;
    doc["max_rel_dev"] = c.max_rel_dev;
    doc["q"] = matrix_to_json(q.matrix());
    return doc;
}

std::string dump(const OrderedJson &doc) {
    return doc.dump(2) + "\n";
}

}  // namespace cvcluster
