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

#include <stdexcept>
#include <string>

namespace cvcluster {

enum class ErrorCode {
    // Input and validation failures.
    NotSquare,
    NotSymmetric,
    NonzeroDiagonal,
    WeightOutOfRange,
    EmptyGraph,
    SyntaxError,
    DimensionMismatch,
    NotUnweighted,
    NoEdges,
    BadPartition,
    InvalidNode,
    InvalidSqueezing,
    // Numerical failures.
    DomainError,
    NoConvergence,
    InvariantViolation,
};

const char *error_code_name(ErrorCode code);

/// True for failures caused by the caller's data rather than by the numerics.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);
    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

/// Parse failure with a 1-based source position. Line 0 means the position is unknown.
class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t line, std::size_t column, const std::string &message);
    std::size_t line() const noexcept {
        return line_;
    }
    std::size_t column() const noexcept {
        return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace cvcluster
