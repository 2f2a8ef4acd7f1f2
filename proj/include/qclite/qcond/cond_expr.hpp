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

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qclite/machine/gate.hpp"

namespace qclite {

/// Boolean expression over qubit atoms and folded classical constants.
class CondExpr {
public:
    enum class Kind { Const, Qubit, Not, And, Or, Xor };

    static CondExpr constant(bool value);
    static CondExpr qubit(Qubit q);
    static CondExpr negate(CondExpr operand);
    static CondExpr conj(CondExpr lhs, CondExpr rhs);
    static CondExpr disj(CondExpr lhs, CondExpr rhs);
    static CondExpr exor(CondExpr lhs, CondExpr rhs);
    /// Conjunction of all qubits; the condition a register stands for.
    static CondExpr all_of(const std::vector<Qubit>& qubits);

    Kind kind() const { return kind_; }
    bool value() const { return value_; }
    Qubit qubit_index() const { return qubit_; }
    const std::vector<CondExpr>& operands() const { return operands_; }

    /// Truth value on a machine basis state.
    bool evaluate(std::uint64_t basis) const;
    std::set<Qubit> qubits() const;
    std::string to_string() const;

    friend bool operator==(const CondExpr&, const CondExpr&) = default;

private:
    static CondExpr make_binary(Kind kind, CondExpr lhs, CondExpr rhs);

    Kind kind_ = Kind::Const;
    bool value_ = false;
    Qubit qubit_ = -1;
    std::vector<CondExpr> operands_;
};

}  // namespace qclite
