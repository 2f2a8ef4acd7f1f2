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
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qclite/error.hpp"
#include "qclite/types.hpp"

namespace qclite::ast {

struct Expr;
struct Stmt;
struct Subroutine;
using ExprPtr = std::unique_ptr<Expr>;
using StmtPtr = std::unique_ptr<Stmt>;
using SubroutinePtr = std::shared_ptr<const Subroutine>;
using Block = std::vector<StmtPtr>;

enum class UnaryOp { Neg, Not, Length };

enum class BinaryOp { Add, Sub, Mul, Div, Mod, Pow, Eq, Ne, Lt, Le, Gt, Ge, And, Or, Xor, Concat };

const char* spelling(UnaryOp op);
const char* spelling(BinaryOp op);

struct IntLit {
    std::int64_t value;
};
struct RealLit {
    double value;
};
struct BoolLit {
    bool value;
};
struct StringLit {
    std::string value;
};
/// (re, im)
struct ComplexLit {
    ExprPtr re;
    ExprPtr im;
};
struct VarRef {
    std::string name;
};
struct Unary {
    UnaryOp op;
    ExprPtr operand;
};
struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};
/// q[i]
struct Index {
    ExprPtr base;
    ExprPtr index;
};
/// q[a:b], inclusive
struct Slice {
    ExprPtr base;
    ExprPtr first;
    ExprPtr last;
};
/// Function call inside an expression, including random().
struct Call {
    std::string name;
    std::vector<ExprPtr> args;
};

struct Expr {
    std::variant<IntLit, RealLit, BoolLit, StringLit, ComplexLit, VarRef, Unary, Binary, Index, Slice, Call> node;
    SourcePos pos;
};

/// int/real/complex/boolean declaration, optionally initialized.
struct VarDecl {
    ClassicalType type;
    std::string name;
    ExprPtr init;
};
struct ConstDecl {
    std::string name;
    ExprPtr value;
};
struct RegisterDecl {
    QuType type;
    std::string name;
    ExprPtr size;
};
struct Assign {
    std::string name;
    ExprPtr value;
};
/// [!]name(args); as a statement.
struct CallStmt {
    std::string name;
    std::vector<ExprPtr> args;
    bool inverted = false;
};
struct If {
    ExprPtr cond;
    Block then_block;
    std::optional<Block> else_block;
};
struct For {
    std::string var;
    ExprPtr from;
    ExprPtr to;
    ExprPtr step;  // null means 1
    Block body;
};
struct While {
    ExprPtr cond;
    Block body;
};
struct Measure {
    ExprPtr reg;
    std::optional<std::string> into;
};
struct Reset {};
struct Dump {};
struct Print {
    std::vector<ExprPtr> items;
};
struct Return {
    ExprPtr value;
};
struct Exit {};

struct Stmt {
    std::variant<VarDecl, ConstDecl, RegisterDecl, Assign, CallStmt, If, For, While, Measure, Reset, Dump, Print,
                 Return, Exit>
        node;
    SourcePos pos;
};

struct Param {
    std::string name;
    std::variant<ClassicalType, QuType> type;
    SourcePos pos;

    bool is_quantum() const { return std::holds_alternative<QuType>(type); }
};

struct Subroutine {
    Level level = Level::Procedure;
    bool is_cond = false;
    std::string name;
    std::vector<Param> params;
    std::optional<ClassicalType> return_type;  // functions only
    Block body;
    SourcePos pos;

    bool has_quscratch() const;
};

/// Top-level items in source order.
struct Program {
    std::vector<std::variant<SubroutinePtr, StmtPtr>> items;

    std::vector<SubroutinePtr> subroutines() const;
    std::vector<const Stmt*> statements() const;
};

template <typename T>
const T* get(const Expr& e) {
    return std::get_if<T>(&e.node);
}

template <typename T>
const T* get(const Stmt& s) {
    return std::get_if<T>(&s.node);
}

}  // namespace qclite::ast
