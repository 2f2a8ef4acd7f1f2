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

#include "qclite/error.hpp"

namespace qclite {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::Lexical: return "lexical error";
        case ErrorCode::Syntax: return "syntax error";
        case ErrorCode::Static: return "static error";
        case ErrorCode::OutOfQubits: return "out of qubits";
        case ErrorCode::SimulatorLimit: return "simulator limit";
        case ErrorCode::InvalidArgument: return "invalid argument";
        case ErrorCode::NotAllocated: return "not allocated";
        case ErrorCode::NotEmpty: return "register not empty";
        case ErrorCode::OutOfBounds: return "out of bounds";
        case ErrorCode::Overlap: return "overlapping registers";
        case ErrorCode::Type: return "type error";
        case ErrorCode::DivisionByZero: return "division by zero";
        case ErrorCode::Hierarchy: return "calling hierarchy violation";
        case ErrorCode::Runtime: return "runtime error";
        case ErrorCode::Io: return "i/o error";
    }
    return "error";
}

static std::string render(ErrorCode code, const std::string& message, SourcePos pos) {
    std::string out;
    if (pos.valid())
        out = std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": ";
    out += to_string(code);
    out += ": ";
    out += message;
    return out;
}

Error::Error(ErrorCode code, const std::string& message, SourcePos pos)
    : std::runtime_error(render(code, message, pos)), code_(code), pos_(pos), message_(message) {}

Error Error::at(SourcePos pos) const {
    if (pos_.valid() || !pos.valid())
        return *this;
    return Error(code_, message_, pos);
}

}  // namespace qclite
