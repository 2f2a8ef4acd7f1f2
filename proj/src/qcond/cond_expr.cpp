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

#include "qclite/qcond/cond_expr.hpp"

namespace qclite {

CondExpr CondExpr::constant(bool value) {
    CondExpr e;
    e.kind_ = Kind::Const;
    e.value_ = value;
    return e;
}

CondExpr CondExpr::qubit(Qubit q) {
    CondExpr e;
    e.kind_ = Kind::Qubit;
    e.qubit_ = q;
    return e;
}

CondExpr CondExpr::negate(CondExpr operand) {
    CondExpr e;
    e.kind_ = Kind::Not;
    e.operands_.push_back(std::move(operand));
    return e;
}

CondExpr CondExpr::conj(CondExpr lhs, CondExpr rhs) { return make_binary(Kind::And, std::move(lhs), std::move(rhs)); }
CondExpr CondExpr::disj(CondExpr lhs, CondExpr rhs) { return make_binary(Kind::Or, std::move(lhs), std::move(rhs)); }
CondExpr CondExpr::exor(CondExpr lhs, CondExpr rhs) { return make_binary(Kind::Xor, std::move(lhs), std::move(rhs)); }

CondExpr CondExpr::all_of(const std::vector<Qubit>& qubits) {
    if (qubits.empty())
        return constant(true);
    CondExpr e = qubit(qubits.front());
    for (std::size_t i = 1; i < qubits.size(); ++i)
        e = conj(std::move(e), qubit(qubits[i]));
    return e;
}

bool CondExpr::evaluate(std::uint64_t basis) const {
    switch (kind_) {
        case Kind::Const: return value_;
        case Kind::Qubit: return (basis >> qubit_) & 1ULL;
        case Kind::Not: return !operands_[0].evaluate(basis);
        case Kind::And: return operands_[0].evaluate(basis) && operands_[1].evaluate(basis);
        case Kind::Or: return operands_[0].evaluate(basis) || operands_[1].evaluate(basis);
        case Kind::Xor: return operands_[0].evaluate(basis) != operands_[1].evaluate(basis);
    }
    return false;
}

std::set<Qubit> CondExpr::qubits() const {
    std::set<Qubit> out;
    if (kind_ == Kind::Qubit)
        out.insert(qubit_);
    for (const auto& op : operands_) {
        auto sub = op.qubits();
        out.insert(sub.begin(), sub.end());
    }
    return out;
}

std::string CondExpr::to_string() const {
    switch (kind_) {
        case Kind::Const: return value_ ? "true" : "false";
        case Kind::Qubit: return "q" + std::to_string(qubit_);
        case Kind::Not: return "not " + operands_[0].to_string();
        case Kind::And: return "(" + operands_[0].to_string() + " and " + operands_[1].to_string() + ")";
        case Kind::Or: return "(" + operands_[0].to_string() + " or " + operands_[1].to_string() + ")";
        case Kind::Xor: return "(" + operands_[0].to_string() + " xor " + operands_[1].to_string() + ")";
    }
    return "?";
}

CondExpr CondExpr::make_binary(Kind kind, CondExpr lhs, CondExpr rhs) {
    CondExpr e;
    e.kind_ = kind;
    e.operands_.push_back(std::move(lhs));
    e.operands_.push_back(std::move(rhs));
    return e;
}

}  // namespace qclite
