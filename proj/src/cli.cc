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

#include "cvcluster/cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "cvcluster/bogoliubov.h"
#include "cvcluster/criteria.h"
#include "cvcluster/error.h"
#include "cvcluster/gaussian_oracle.h"
#include "cvcluster/graph.h"
#include "cvcluster/json_io.h"
#include "cvcluster/matfun.h"

namespace cvcluster::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double x) {
    std::ostringstream ss;
    ss << std::setprecision(6) << x;
    return ss.str();
}

std::string db_text(double db) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(2) << db;
    return ss.str();
}

std::string edge_text(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

ClusterGraph load_graph(const CliConfig &cfg) {
    const std::string &path = *cfg.graph_path;
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read graph file \"" + path + "\"");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    GraphFormat format = format_from_path(path);
    if (cfg.graph_format) {
        format = *cfg.graph_format == "json" ? GraphFormat::json : GraphFormat::edgelist;
    }
    return parse_graph(buf.str(), format);
}

std::optional<SqueezingLevel> squeezing(const CliConfig &cfg, std::ostream &err) {
    if (cfg.variance) {
        return SqueezingLevel(*cfg.variance);
    }
    if (cfg.db) {
        double magnitude = *cfg.db;
        if (magnitude < 0.0) {
            err << "warning: --db " << num(magnitude) << " read as " << num(-magnitude) << " dB of squeezing\n";
            magnitude = -magnitude;
        }
        return SqueezingLevel::from_db(-magnitude);
    }
    return std::nullopt;
}

SqueezingLevel require_squeezing(const CliConfig &cfg, std::ostream &err) {
    auto s = squeezing(cfg, err);
    if (!s) {
        throw InputError("this command needs --variance or --db");
    }
    return *s;
}

OrthogonalMatrix choose_q(const CliConfig &cfg, std::size_t n) {
    return cfg.q_mode == QMode::random ? random_orthogonal(n, cfg.seed) : OrthogonalMatrix::identity(n);
}

std::string squeezing_line(const SqueezingLevel &s) {
    return "squeezing: variance = " + num(s.variance()) + " (" + db_text(s.db()) + " dB)\n";
}

std::string render_analyze(const CliConfig &cfg, const ClusterGraph &g, const NullifierReport &r) {
    if (cfg.output == OutputMode::json) {
        return dump(to_json(r));
    }
    std::ostringstream ss;
    ss << "graph: " << g.size() << " nodes, " << r.edge_verdicts.size() << " edges\n";
    ss << squeezing_line(r.squeezing_used);
    for (std::size_t j = 0; j < r.coefficients.size(); ++j) {
        ss << "node " << j << ": coefficient " << num(r.coefficients[j]) << ", nullifier variance "
           << num(r.variances[j]) << "\n";
    }
    if (r.threshold) {
        ss << "threshold variance = " << num(r.threshold->value) << " ("
           << db_text(SqueezingLevel(r.threshold->value).db()) << " dB), edge "
           << edge_text(r.threshold->argmin_edge.first, r.threshold->argmin_edge.second) << "\n";
    } else {
        ss << "threshold: none (graph has no edges)\n";
    }
    for (const auto &v : r.edge_verdicts) {
        ss << "edge " << edge_text(v.i, v.j) << ": lhs = " << num(v.lhs) << ", |a| = " << num(v.weight_abs) << ", "
           << (v.inseparable ? "inseparable" : "not inseparable") << "\n";
    }
    ss << "max squeezing demand: nodes";
    for (std::size_t j : r.max_demand_nodes) {
        ss << " " << j;
    }
    ss << "\n";
    return ss.str();
}

std::string render_threshold(const CliConfig &cfg, const ClusterGraph &g) {
    const SqueezingThreshold t = min_squeezing_threshold(g);
    if (cfg.output == OutputMode::json) {
        return dump(threshold_to_json(t, edge_bounds(g)));
    }
    std::ostringstream ss;
    ss << "threshold variance = " << num(t.value) << " (" << db_text(SqueezingLevel(t.value).db()) << " dB), edge "
       << edge_text(t.argmin_edge.first, t.argmin_edge.second) << "\n";
    if (t.tied.size() > 1) {
        ss << "tied edges:";
        for (const auto &[i, j] : t.tied) {
            ss << " " << edge_text(i, j);
        }
        ss << "\n";
    }
    return ss.str();
}

std::string render_budget(const CliConfig &cfg, const SqueezingLevel &s) {
    const NeighborBudget b = neighbor_budget(s);
    if (cfg.output == OutputMode::json) {
        return dump(to_json(b, s));
    }
    std::ostringstream ss;
    ss << "max adjacent-degree sum: " << b.max_degree_sum << "\n";
    if (!b.generable) {
        ss << "no unweighted cluster generable at this squeezing\n";
    }
    return ss.str();
}

std::string render_verify(const CliConfig &cfg, const TheoremCheck &c, const OrthogonalMatrix &q) {
    if (cfg.output == OutputMode::json) {
        return dump(to_json(c, q));
    }
    std::ostringstream ss;
    for (std::size_t j = 0; j < c.measured.size(); ++j) {
        ss << "node " << j << ": measured " << num(c.measured[j]) << ", formula " << num(c.formula[j]) << "\n";
    }
    ss << "max relative deviation: " << num(c.max_rel_dev) << "\n";
    return ss.str();
}

int execute(const CliConfig &cfg, std::ostream &out, std::ostream &err) {
    std::string text;
    int code = kExitOk;
    switch (cfg.command) {
        case Command::analyze: {
            const ClusterGraph g = load_graph(cfg);
            const SqueezingLevel s = require_squeezing(cfg, err);
            text = render_analyze(cfg, g, analyze(g, s));
            break;
        }
        case Command::threshold:
            text = render_threshold(cfg, load_graph(cfg));
            break;
        case Command::budget:
            text = render_budget(cfg, require_squeezing(cfg, err));
            break;
        case Command::synthesize: {
            const ClusterGraph g = load_graph(cfg);
            text = dump(to_json(synthesize_u(g, choose_q(cfg, g.size()))));
            break;
        }
        case Command::verify: {
            const ClusterGraph g = load_graph(cfg);
            const SqueezingLevel s = require_squeezing(cfg, err);
            const OrthogonalMatrix q = choose_q(cfg, g.size());
            const TheoremCheck c = verify_theorem(g, s, q);
            text = render_verify(cfg, c, q);
            if (!(c.max_rel_dev <= kVerifyTolerance)) {
                err << "error: max relative deviation " << num(c.max_rel_dev) << " exceeds " << num(kVerifyTolerance)
                    << "\n";
                code = kExitNumerical;
            }
            break;
        }
    }

    if (cfg.out_path) {
        std::ofstream file(*cfg.out_path, std::ios::binary);
        if (!file || !(file << text)) {
            throw InputError("cannot write \"" + *cfg.out_path + "\"");
        }
    } else {
        out << text;
    }
    return code;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Minimum-squeezing analysis of continuous-variable cluster states"};
    app.name("cvcluster");
    app.require_subcommand(1);

    CliConfig cfg;
    std::string q_text = "identity";
    std::string output_text = "human";
    bool json_flag = false;

    struct Sub {
        Command command;
        const char *name;
        const char *description;
        bool needs_graph;
        bool has_q;
    };
    const Sub subs[] = {
        {Command::analyze, "analyze", "Nullifier variances, threshold and per-edge verdicts", true, false},
        {Command::threshold, "threshold", "Minimum-squeezing threshold and the edge(s) attaining it", true, false},
        {Command::budget, "budget", "Largest degree sum of two adjacent nodes for a given squeezing", false, false},
        {Command::synthesize, "synthesize", "Write the generating transform as JSON", true, true},
        {Command::verify, "verify", "Compare closed-form variances with a covariance simulation", true, true},
    };

    std::map<CLI::App *, Command> commands;
    for (const Sub &sub : subs) {
        CLI::App *cmd = app.add_subcommand(sub.name, sub.description);
        commands[cmd] = sub.command;
        if (sub.needs_graph) {
            cmd->add_option("graph", cfg.graph_path, "Graph file (.json, otherwise edge list)")->required();
            cmd->add_option("--format", cfg.graph_format, "Graph file format")
                ->check(CLI::IsMember({"json", "edgelist"}));
        }
        if (sub.command != Command::threshold && sub.command != Command::synthesize) {
            auto *variance = cmd->add_option("--variance", cfg.variance, "Squeezed quadrature variance (vacuum = 0.25)");
            auto *db = cmd->add_option("--db", cfg.db, "Squeezing in dB below vacuum, e.g. 6");
            variance->excludes(db);
            db->excludes(variance);
        }
        if (sub.has_q) {
            cmd->add_option("--q", q_text, "Orthogonal factor: identity or random")
                ->check(CLI::IsMember({"identity", "random"}));
            cmd->add_option("--seed", cfg.seed, "Seed for --q random");
        }
        if (sub.command != Command::synthesize) {
            auto *output = cmd->add_option("--output", output_text, "Output mode: human or json")
                               ->check(CLI::IsMember({"human", "json"}));
            cmd->add_flag("--json", json_flag, "Shorthand for --output json")->excludes(output);
        }
        cmd->add_option("--out", cfg.out_path, "Write the result to this file instead of stdout");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help("", CLI::AppFormatMode::All);
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    for (const auto &[cmd, command] : commands) {
        if (cmd->parsed()) {
            cfg.command = command;
        }
    }
    cfg.q_mode = q_text == "random" ? QMode::random : QMode::identity;
    cfg.output = (json_flag || output_text == "json") ? OutputMode::json : OutputMode::human;

    try {
        return execute(cfg, out, err);
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return is_input_error(e.code()) ? kExitInput : kExitNumerical;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

}  // namespace cvcluster::cli
