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

#include "qclite/interp/builtins.hpp"

#include <array>
#include <cmath>

namespace qclite {

namespace {

double sqrt_(double x) { return std::sqrt(x); }
double sin_(double x) { return std::sin(x); }
double cos_(double x) { return std::cos(x); }
double exp_(double x) { return std::exp(x); }
double log_(double x) { return std::log(x); }
double abs_(double x) { return std::fabs(x); }
double floor_(double x) { return std::floor(x); }
double ceil_(double x) { return std::ceil(x); }

constexpr std::array<MathBuiltin, 8> kMath{{
    {"sqrt", ClassicalType::Real, sqrt_},
    {"sin", ClassicalType::Real, sin_},
    {"cos", ClassicalType::Real, cos_},
    {"exp", ClassicalType::Real, exp_},
    {"log", ClassicalType::Real, log_},
    {"abs", ClassicalType::Real, abs_},
    {"floor", ClassicalType::Int, floor_},
    {"ceil", ClassicalType::Int, ceil_},
}};

}  // namespace

const MathBuiltin* find_math_builtin(std::string_view name) {
    for (const auto& m : kMath)
        if (m.name == name)
            return &m;
    return nullptr;
}

bool is_expression_builtin(std::string_view name) {
    return name == "random" || find_math_builtin(name) != nullptr;
}

}  // namespace qclite
