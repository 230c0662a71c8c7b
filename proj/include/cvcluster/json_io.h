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

#include <string>

#include "cvcluster/bogoliubov.h"
#include "cvcluster/criteria.h"
#include "cvcluster/gaussian_oracle.h"
#include "json.hpp"

// JSON documents written by the command-line tool. Key order is fixed and
// doubles are written in shortest round-trip form, so output is
// byte-deterministic for fixed inputs.

namespace cvcluster {

using OrderedJson = nlohmann::ordered_json;

OrderedJson matrix_to_json(const Matrix &m);

/// {"n", "re", "im", "q"}, row-major.
OrderedJson to_json(const BogoliubovTransform &t);

/// {"variance", "db"}.
OrderedJson to_json(const SqueezingLevel &s);

/// {"coefficients", "variances", "threshold", "threshold_db", "argmin_edge",
///  "tied_edges", "max_demand_nodes", "edges", "squeezing"}; the threshold keys
/// are omitted for an edgeless graph.
OrderedJson to_json(const NullifierReport &r);

/// {"threshold", "threshold_db", "argmin_edge", "tied_edges", "candidates"}.
OrderedJson threshold_to_json(const SqueezingThreshold &t, const std::vector<EdgeBound> &candidates);

/// {"squeezing", "bound", "max_degree_sum", "generable"}.
OrderedJson to_json(const NeighborBudget &b, const SqueezingLevel &s);

/// {"measured", "formula", "max_rel_dev", "q"}.
OrderedJson to_json(const TheoremCheck &c, const OrthogonalMatrix &q);

/// Two-space indented dump with a trailing newline.
std::string dump(const OrderedJson &doc);

}  // namespace cvcluster
