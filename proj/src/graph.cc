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

#include "cvcluster/graph.h"

#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include "cvcluster/error.h"
#include "json.hpp"

namespace cvcluster {

namespace {

// Graphs are dense; this keeps a malformed header from requesting gigabytes.
constexpr std::size_t kMaxNodes = 4096;

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string entry_name(Eigen::Index i, Eigen::Index j) {
    std::ostringstream ss;
    ss << "(" << i << "," << j << ")";
    return ss.str();
}

/// Collects edges for either parser and enforces the duplicate rule.
class EdgeAccumulator {
   public:
    explicit EdgeAccumulator(std::size_t n) : matrix_(Matrix::Zero(n, n)) {
    }

    /// Returns an error message, or an empty string on success.
    std::string add(std::size_t i, std::size_t j, double w) {
        auto key = std::minmax(i, j);
        auto [it, inserted] = seen_.emplace(key, w);
        if (!inserted) {
            // Bitwise-equal weights only (NaN never matches itself either).
            if (!(it->second == w) || std::signbit(it->second) != std::signbit(w)) {
                return "conflicting duplicate edge " + entry_name(key.first, key.second) + ": " +
                       format_double(it->second) + " vs " + format_double(w);
            }
            return {};
        }
        auto ii = static_cast<Eigen::Index>(i);
        auto jj = static_cast<Eigen::Index>(j);
        matrix_(ii, jj) = w;
        matrix_(jj, ii) = w;
        return {};
    }

    Matrix take() {
        return std::move(matrix_);
    }

   private:
    Matrix matrix_;
    std::map<std::pair<std::size_t, std::size_t>, double> seen_;
};

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte_offset) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < byte_offset && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

ClusterGraph parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        // e.byte is the 1-based offset of the offending character.
        auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw SyntaxError(line, column, e.what());
    }
    if (!doc.is_object()) {
        throw SyntaxError(0, 0, "graph document must be a JSON object");
    }
    for (const auto &item : doc.items()) {
        if (item.key() != "n" && item.key() != "edges" && item.key() != "name") {
            throw SyntaxError(0, 0, "unknown key \"" + item.key() + "\"");
        }
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer()) {
        throw SyntaxError(0, 0, "\"n\" must be present and an integer");
    }
    auto n_signed = doc["n"].get<std::int64_t>();
    if (n_signed < 1 || static_cast<std::size_t>(n_signed) > kMaxNodes) {
        throw SyntaxError(0, 0, "\"n\" must be in [1, " + std::to_string(kMaxNodes) + "]");
    }
    auto n = static_cast<std::size_t>(n_signed);

    EdgeAccumulator acc(n);
    if (doc.contains("edges")) {
        const auto &edges = doc["edges"];
        if (!edges.is_array()) {
            throw SyntaxError(0, 0, "\"edges\" must be an array");
        }
        for (std::size_t k = 0; k < edges.size(); ++k) {
            const auto &e = edges[k];
            std::string where = "edges[" + std::to_string(k) + "]: ";
            if (!e.is_array() || e.size() != 3) {
                throw SyntaxError(0, 0, where + "expected [i, j, w]");
            }
            if (!e[0].is_number_integer() || !e[1].is_number_integer() || !e[2].is_number()) {
                throw SyntaxError(0, 0, where + "i and j must be integers and w a number");
            }
            auto i = e[0].get<std::int64_t>();
            auto j = e[1].get<std::int64_t>();
            if (i < 0 || j < 0 || i >= n_signed || j >= n_signed) {
                throw SyntaxError(0, 0, where + "node index out of range");
            }
            if (!(i < j)) {
                throw SyntaxError(0, 0, where + "edges must satisfy i < j");
            }
            auto msg = acc.add(static_cast<std::size_t>(i), static_cast<std::size_t>(j), e[2].get<double>());
            if (!msg.empty()) {
                throw SyntaxError(0, 0, where + msg);
            }
        }
    }
    ClusterGraph g = validate_adjacency(acc.take());
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) {
            throw SyntaxError(0, 0, "\"name\" must be a string");
        }
        g.set_name(doc["name"].get<std::string>());
    }
    return g;
}

struct Token {
    std::string_view text;
    std::size_t column;
};

std::vector<Token> split_tokens(std::string_view line) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) {
            ++k;
        }
        std::size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') {
            ++k;
        }
        if (k > start) {
            out.push_back({line.substr(start, k - start), start + 1});
        }
    }
    return out;
}

std::size_t parse_index(const Token &tok, std::size_t line_no) {
    std::size_t value = 0;
    auto res = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (res.ec != std::errc{} || res.ptr != tok.text.data() + tok.text.size()) {
        throw SyntaxError(line_no, tok.column, "expected a non-negative integer, got \"" + std::string(tok.text) + "\"");
    }
    return value;
}

double parse_weight(const Token &tok, std::size_t line_no) {
    std::string_view s = tok.text;
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double value = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw SyntaxError(line_no, tok.column, "expected a number, got \"" + std::string(tok.text) + "\"");
    }
    return value;
}

ClusterGraph parse_edgelist(std::string_view text) {
    std::size_t n = 0;
    bool have_header = false;
    std::optional<EdgeAccumulator> acc;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = split_tokens(line);
        if (tokens.empty()) {
            continue;
        }
        if (!have_header) {
            if (tokens.size() != 1) {
                throw SyntaxError(line_no, tokens[1].column, "first line must hold only the node count");
            }
            n = parse_index(tokens[0], line_no);
            if (n < 1 || n > kMaxNodes) {
                throw SyntaxError(line_no, tokens[0].column, "node count must be in [1, " + std::to_string(kMaxNodes) + "]");
            }
            have_header = true;
            acc.emplace(n);
            continue;
        }
        if (tokens.size() != 3) {
            throw SyntaxError(line_no, tokens.front().column, "expected \"i j w\"");
        }
        std::size_t i = parse_index(tokens[0], line_no);
        std::size_t j = parse_index(tokens[1], line_no);
        double w = parse_weight(tokens[2], line_no);
        if (i >= n) {
            throw SyntaxError(line_no, tokens[0].column, "node index out of range");
        }
        if (j >= n) {
            throw SyntaxError(line_no, tokens[1].column, "node index out of range");
        }
        auto msg = acc->add(i, j, w);
        if (!msg.empty()) {
            throw SyntaxError(line_no, tokens[0].column, msg);
        }
    }
    if (!have_header) {
        throw SyntaxError(line_no, 1, "missing node count");
    }
    return validate_adjacency(acc->take());
}

}  // namespace

std::vector<Edge> ClusterGraph::edges() const {
    std::vector<Edge> out;
    const auto n = weights_.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (weights_(i, j) != 0.0) {
                out.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), weights_(i, j)});
            }
        }
    }
    return out;
}

bool ClusterGraph::has_edges() const {
    return (weights_.array() != 0.0).any();
}

bool ClusterGraph::operator==(const ClusterGraph &other) const {
    return weights_.rows() == other.weights_.rows() && (weights_.array() == other.weights_.array()).all();
}

ClusterGraph validate_adjacency(const Matrix &raw) {
    if (raw.rows() != raw.cols()) {
        std::ostringstream ss;
        ss << "adjacency matrix is " << raw.rows() << "x" << raw.cols() << ", not square";
        throw Error(ErrorCode::NotSquare, ss.str());
    }
    if (raw.rows() == 0) {
        throw Error(ErrorCode::EmptyGraph, "adjacency matrix has no nodes");
    }
    const auto n = raw.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            double w = raw(i, j);
            if (!(w >= -1.0 && w <= 1.0)) {
                throw Error(ErrorCode::WeightOutOfRange,
                            "weight " + entry_name(i, j) + " = " + format_double(w) + " is outside [-1, 1]");
            }
        }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if (raw(i, i) != 0.0) {
            throw Error(ErrorCode::NonzeroDiagonal,
                        "diagonal entry " + entry_name(i, i) + " = " + format_double(raw(i, i)) + " must be zero");
        }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (raw(i, j) != raw(j, i)) {
                throw Error(ErrorCode::NotSymmetric, "entries " + entry_name(i, j) + " and " + entry_name(j, i) +
                                                         " differ: " + format_double(raw(i, j)) + " vs " +
                                                         format_double(raw(j, i)));
            }
        }
    }
    return ClusterGraph(raw);
}

ClusterGraph validate_adjacency(const std::vector<std::vector<double>> &rows) {
    const auto n = rows.size();
    Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            std::ostringstream ss;
            ss << "row " << i << " has " << rows[i].size() << " entries, expected " << n;
            throw Error(ErrorCode::NotSquare, ss.str());
        }
        for (std::size_t j = 0; j < n; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return validate_adjacency(m);
}

std::vector<NodeId> neighbors(const ClusterGraph &g, NodeId j) {
    if (j.index >= g.size()) {
        throw Error(ErrorCode::InvalidNode,
                    "node " + std::to_string(j.index) + " is out of range for a graph of " + std::to_string(g.size()) +
                        " nodes");
    }
    std::vector<NodeId> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g.weight(j.index, i) != 0.0) {
            out.push_back({i});
        }
    }
    return out;
}

GraphFormat format_from_path(std::string_view path) {
    constexpr std::string_view ext = ".json";
    if (path.size() >= ext.size() && path.substr(path.size() - ext.size()) == ext) {
        return GraphFormat::json;
    }
    return GraphFormat::edgelist;
}

ClusterGraph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::json ? parse_json(text) : parse_edgelist(text);
}

std::string serialize_graph(const ClusterGraph &g, GraphFormat format) {
    if (format == GraphFormat::json) {
        nlohmann::ordered_json doc;
        if (!g.name().empty()) {
            doc["name"] = g.name();
        }
        doc["n"] = g.size();
        doc["edges"] = nlohmann::ordered_json::array();
        for (const auto &e : g.edges()) {
            doc["edges"].push_back({e.i, e.j, e.weight});
        }
        return doc.dump() + "\n";
    }
    std::string out = std::to_string(g.size()) + "\n";
    for (const auto &e : g.edges()) {
        out += std::to_string(e.i) + " " + std::to_string(e.j) + " " + format_double(e.weight) + "\n";
    }
    return out;
}

}  // namespace cvcluster
