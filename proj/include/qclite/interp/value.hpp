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

#include <complex>
#include <cstdint>
#include <string>
#include <variant>

#include "qclite/machine/register_map.hpp"
#include "qclite/types.hpp"

namespace qclite {

struct RegisterValue {
    RegisterMap reg;
    QuType type = QuType::Qureg;

    friend bool operator==(const RegisterValue&, const RegisterValue&) = default;
};

/// A runtime value. Strings exist only as print arguments.
class Value {
public:
    using Storage = std::variant<std::int64_t, double, std::complex<double>, bool, std::string, RegisterValue>;

    Value() : v_(std::int64_t{0}) {}
    Value(std::int64_t i) : v_(i) {}
    Value(int i) : v_(std::int64_t{i}) {}
    Value(double d) : v_(d) {}
    Value(std::complex<double> c) : v_(c) {}
    Value(bool b) : v_(b) {}
    Value(std::string s) : v_(std::move(s)) {}
    Value(RegisterValue r) : v_(std::move(r)) {}
    Value(RegisterMap reg, QuType type = QuType::Qureg) : v_(RegisterValue{std::move(reg), type}) {}

    bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
    bool is_real() const { return std::holds_alternative<double>(v_); }
    bool is_complex() const { return std::holds_alternative<std::complex<double>>(v_); }
    bool is_bool() const { return std::holds_alternative<bool>(v_); }
    bool is_string() const { return std::holds_alternative<std::string>(v_); }
    bool is_register() const { return std::holds_alternative<RegisterValue>(v_); }
    bool is_numeric() const { return is_int() || is_real() || is_complex(); }

    std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
    bool as_bool() const { return std::get<bool>(v_); }
    const std::string& as_string() const { return std::get<std::string>(v_); }
    const RegisterValue& as_register() const { return std::get<RegisterValue>(v_); }
    /// int or real widened to double.
    double as_real() const;
    /// Any numeric widened to complex.
    std::complex<double> as_complex() const;

    const Storage& storage() const { return v_; }
    std::string type_name() const;
    /// Text used by print.
    std::string to_display() const;

    friend bool operator==(const Value&, const Value&) = default;

private:
    Storage v_;
};

}  // namespace qclite
