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

#include "qclite/interp/value.hpp"

#include <cstdio>

#include "qclite/error.hpp"

namespace qclite {

double Value::as_real() const {
    if (is_int())
        return static_cast<double>(as_int());
    if (is_real())
        return std::get<double>(v_);
    throw Error(ErrorCode::Type, "expected a real number, got " + type_name());
}

std::complex<double> Value::as_complex() const {
    if (is_complex())
        return std::get<std::complex<double>>(v_);
    return {as_real(), 0.0};
}

std::string Value::type_name() const {
    switch (v_.index()) {
        case 0: return "int";
        case 1: return "real";
        case 2: return "complex";
        case 3: return "boolean";
        case 4: return "string";
        case 5: return to_string(as_register().type);
    }
    return "?";
}

static std::string real_text(double d) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", d);
    return buf;
}

std::string Value::to_display() const {
    if (is_int())
        return std::to_string(as_int());
    if (is_real())
        return real_text(std::get<double>(v_));
    if (is_complex()) {
        const auto c = std::get<std::complex<double>>(v_);
        return "(" + real_text(c.real()) + "," + real_text(c.imag()) + ")";
    }
    if (is_bool())
        return as_bool() ? "true" : "false";
    if (is_string())
        return as_string();
    return as_register().reg.to_string();
}

}  // namespace qclite
