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

#include <string_view>

#include "qclite/types.hpp"

namespace qclite {

/// Classical one-argument functions usable in expressions.
struct MathBuiltin {
    std::string_view name;
    ClassicalType result;
    double (*fn)(double);
};

const MathBuiltin* find_math_builtin(std::string_view name);

/// random() or a math builtin.
bool is_expression_builtin(std::string_view name);

}  // namespace qclite
