// Copyright 2026 The qclite Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qclite {

struct SourcePos {
    int line = 0;
    int column = 0;

    bool valid() const { return line > 0; }
    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class ErrorCode {
    Lexical,
    Syntax,
    Static,
    OutOfQubits,
    SimulatorLimit,
    InvalidArgument,
    NotAllocated,
    NotEmpty,
    OutOfBounds,
    Overlap,
    Type,
    DivisionByZero,
    Hierarchy,
    Runtime,
    Io,
};

const char* to_string(ErrorCode code);

/// Every failure raised by qclite. Carries a machine-checkable code and, when
/// the failure can be attributed to source text, the position.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, SourcePos pos = {});

    ErrorCode code() const { return code_; }
    const SourcePos& pos() const { return pos_; }
    const std::string& message() const { return message_; }

    /// Returns a copy positioned at `pos` unless a position is already set.
    Error at(SourcePos pos) const;

private:
    ErrorCode code_;
    SourcePos pos_;
    std::string message_;
};

}  // namespace qclite
