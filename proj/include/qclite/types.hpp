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

namespace qclite {

enum class QuType { Qureg, Quconst, Quvoid, Quscratch };

enum class ClassicalType { Int, Real, Complex, Boolean };

/// Calling hierarchy: a subroutine may call the same or a lower level.
enum class Level { Function = 0, Qufunct = 1, Operator = 2, Procedure = 3 };

inline const char* to_string(QuType t) {
    switch (t) {
        case QuType::Qureg: return "qureg";
        case QuType::Quconst: return "quconst";
        case QuType::Quvoid: return "quvoid";
        case QuType::Quscratch: return "quscratch";
    }
    return "?";
}

inline const char* to_string(ClassicalType t) {
    switch (t) {
        case ClassicalType::Int: return "int";
        case ClassicalType::Real: return "real";
        case ClassicalType::Complex: return "complex";
        case ClassicalType::Boolean: return "boolean";
    }
    return "?";
}

inline const char* to_string(Level l) {
    switch (l) {
        case Level::Function: return "function";
        case Level::Qufunct: return "qufunct";
        case Level::Operator: return "operator";
        case Level::Procedure: return "procedure";
    }
    return "?";
}

}  // namespace qclite
