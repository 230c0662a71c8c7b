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

#include "cvcluster/error.h"

namespace cvcluster {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotSquare:
            return "NotSquare";
        case ErrorCode::NotSymmetric:
            return "NotSymmetric";
        case ErrorCode::NonzeroDiagonal:
            return "NonzeroDiagonal";
        case ErrorCode::WeightOutOfRange:
            return "WeightOutOfRange";
        case ErrorCode::EmptyGraph:
            return "EmptyGraph";
        case ErrorCode::SyntaxError:
            return "SyntaxError";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::NotUnweighted:
            return "NotUnweighted";
        case ErrorCode::NoEdges:
            return "NoEdges";
        case ErrorCode::BadPartition:
            return "BadPartition";
        case ErrorCode::InvalidNode:
            return "InvalidNode";
        case ErrorCode::InvalidSqueezing:
            return "InvalidSqueezing";
        case ErrorCode::DomainError:
            return "DomainError";
        case ErrorCode::NoConvergence:
            return "NoConvergence";
        case ErrorCode::InvariantViolation:
            return "InvariantViolation";
    }
    return "Unknown";
}

bool is_input_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::DomainError:
        case ErrorCode::NoConvergence:
        case ErrorCode::InvariantViolation:
            return false;
        default:
            return true;
    }
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

namespace {

std::string with_position(std::size_t line, std::size_t column, const std::string &message) {
    if (line == 0) {
        return message;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string &message)
    : Error(ErrorCode::SyntaxError, with_position(line, column, message)), line_(line), column_(column) {
}

}  // namespace cvcluster
