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

#include "qclite/syntax/ast.hpp"

namespace qclite::ast {

const char* spelling(UnaryOp op) {
    switch (op) {
        case UnaryOp::Neg: return "-";
        case UnaryOp::Not: return "not ";
        case UnaryOp::Length: return "#";
    }
    return "?";
}

const char* spelling(BinaryOp op) {
    switch (op) {
        case BinaryOp::Add: return "+";
        case BinaryOp::Sub: return "-";
        case BinaryOp::Mul: return "*";
        case BinaryOp::Div: return "/";
        case BinaryOp::Mod: return "mod";
        case BinaryOp::Pow: return "^";
        case BinaryOp::Eq: return "==";
        case BinaryOp::Ne: return "!=";
        case BinaryOp::Lt: return "<";
        case BinaryOp::Le: return "<=";
        case BinaryOp::Gt: return ">";
        case BinaryOp::Ge: return ">=";
        case BinaryOp::And: return "and";
        case BinaryOp::Or: return "or";
        case BinaryOp::Xor: return "xor";
        case BinaryOp::Concat: return "&";
    }
    return "?";
}

bool Subroutine::has_quscratch() const {
    for (const auto& p : params)
        if (const auto* qt = std::get_if<QuType>(&p.type); qt && *qt == QuType::Quscratch)
            return true;
    return false;
}

std::vector<SubroutinePtr> Program::subroutines() const {
    std::vector<SubroutinePtr> out;
    for (const auto& item : items)
        if (const auto* sub = std::get_if<SubroutinePtr>(&item))
            out.push_back(*sub);
    return out;
}

std::vector<const Stmt*> Program::statements() const {
    std::vector<const Stmt*> out;
    for (const auto& item : items)
        if (const auto* stmt = std::get_if<StmtPtr>(&item))
            out.push_back(stmt->get());
    return out;
}

}  // namespace qclite::ast
