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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cvcluster::cli {

enum class Command { analyze, threshold, budget, synthesize, verify };
enum class QMode { identity, random };
enum class OutputMode { human, json };

struct CliConfig {
    Command command = Command::analyze;
    std::optional<std::string> graph_path;
    std::optional<std::string> graph_format;  // "json" or "edgelist"; inferred from the path otherwise
    std::optional<double> variance;
    std::optional<double> db;  // magnitude of squeezing in dB
    QMode q_mode = QMode::identity;
    std::uint64_t seed = 0;
    OutputMode output = OutputMode::human;
    std::optional<std::string> out_path;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitInput = 2;

/// Largest relative deviation `verify` accepts before failing.
inline constexpr double kVerifyTolerance = 1e-8;

/// Parses and executes one command line (without the program name).
/// Results go to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace cvcluster::cli
