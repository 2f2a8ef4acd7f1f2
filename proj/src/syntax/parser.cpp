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

#include "qclite/syntax/parser.hpp"

#include <charconv>
#include <cstdlib>

namespace qclite {

using namespace ast;

namespace {

std::optional<ClassicalType> classical_type(const Token& t) {
    if (t.kind != TokenKind::Keyword)
        return std::nullopt;
    if (t.text == "int")
        return ClassicalType::Int;
    if (t.text == "real")
        return ClassicalType::Real;
    if (t.text == "complex")
        return ClassicalType::Complex;
    if (t.text == "boolean")
        return ClassicalType::Boolean;
    return std::nullopt;
}

std::optional<QuType> quantum_type(const Token& t) {
    if (t.kind != TokenKind::Keyword)
        return std::nullopt;
    if (t.text == "qureg")
        return QuType::Qureg;
    if (t.text == "quconst")
        return QuType::Quconst;
    if (t.text == "quvoid")
        return QuType::Quvoid;
    if (t.text == "quscratch")
        return QuType::Quscratch;
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

    Program program() {
        Program prog;
        while (!at_end()) {
            if (starts_subroutine())
                prog.items.emplace_back(subroutine());
            else
                prog.items.emplace_back(statement());
        }
        return prog;
    }

private:
    bool at_end() const { return i_ >= toks_.size(); }

    const Token& peek(std::size_t ahead = 0) const {
        static const Token eof{TokenKind::Symbol, "", 0, 0};
        return i_ + ahead < toks_.size() ? toks_[i_ + ahead] : eof;
    }

    SourcePos here() const {
        if (!at_end())
            return peek().pos();
        if (toks_.empty())
            return {1, 1};
        const Token& last = toks_.back();
        return {last.line, last.column + static_cast<int>(last.text.size())};
    }

    [[noreturn]] void fail(const std::string& expected) const {
        const std::string found = at_end() ? "end of input" : "'" + peek().text + "'";
        throw Error(ErrorCode::Syntax, "expected " + expected + " but found " + found, here());
    }

    bool accept_symbol(std::string_view s) {
        if (!at_end() && peek().is_symbol(s)) {
            ++i_;
            return true;
        }
        return false;
    }

    bool accept_keyword(std::string_view k) {
        if (!at_end() && peek().is_keyword(k)) {
            ++i_;
            return true;
        }
        return false;
    }

    void expect_symbol(std::string_view s) {
        if (!accept_symbol(s))
            fail("'" + std::string(s) + "'");
    }

    void expect_keyword(std::string_view k) {
        if (!accept_keyword(k))
            fail("'" + std::string(k) + "'");
    }

    std::string identifier(const char* what = "identifier") {
        if (at_end() || peek().kind != TokenKind::Identifier)
            fail(what);
        return toks_[i_++].text;
    }

    bool starts_subroutine() const {
        const Token& t = peek();
        if (t.is_keyword("cond") || t.is_keyword("procedure") || t.is_keyword("operator") ||
            t.is_keyword("qufunct"))
            return true;
        return classical_type(t) && peek(1).kind == TokenKind::Identifier && peek(2).is_symbol("(");
    }

    SubroutinePtr subroutine() {
        auto sub = std::make_shared<Subroutine>();
        sub->pos = here();
        sub->is_cond = accept_keyword("cond");
        if (accept_keyword("procedure")) {
            sub->level = Level::Procedure;
        } else if (accept_keyword("operator")) {
            sub->level = Level::Operator;
        } else if (accept_keyword("qufunct")) {
            sub->level = Level::Qufunct;
        } else if (auto ct = classical_type(peek()); ct && !sub->is_cond) {
            ++i_;
            sub->level = Level::Function;
            sub->return_type = *ct;
        } else {
            fail(sub->is_cond ? "'operator' or 'qufunct'" : "subroutine declaration");
        }
        if (sub->is_cond && sub->level == Level::Procedure)
            throw Error(ErrorCode::Syntax, "'cond' applies only to operator and qufunct declarations", sub->pos);
        sub->name = identifier("subroutine name");
        expect_symbol("(");
        if (!accept_symbol(")")) {
            do {
                sub->params.push_back(param());
            } while (accept_symbol(","));
            expect_symbol(")");
        }
        sub->body = block();
        return sub;
    }

    Param param() {
        Param p;
        p.pos = here();
        if (auto ct = classical_type(peek())) {
            ++i_;
            p.type = *ct;
        } else if (auto qt = quantum_type(peek())) {
            ++i_;
            p.type = *qt;
        } else {
            fail("parameter type");
        }
        p.name = identifier("parameter name");
        return p;
    }

    Block block() {
        expect_symbol("{");
        Block out;
        while (!accept_symbol("}")) {
            if (at_end())
                fail("'}'");
            if (starts_subroutine())
                throw Error(ErrorCode::Syntax, "subroutine declarations are only allowed at top level", here());
            out.push_back(statement());
        }
        return out;
    }

    StmtPtr make(SourcePos pos, auto node) {
        auto s = std::make_unique<Stmt>();
        s->node = std::move(node);
        s->pos = pos;
        return s;
    }

    StmtPtr statement() {
        const SourcePos pos = here();
        const Token& t = peek();

        if (auto ct = classical_type(t)) {
            ++i_;
            VarDecl d{*ct, identifier("variable name"), nullptr};
            if (accept_symbol("="))
                d.init = expr();
            expect_symbol(";");
            return make(pos, std::move(d));
        }
        if (auto qt = quantum_type(t)) {
            ++i_;
            RegisterDecl d{*qt, identifier("register name"), nullptr};
            expect_symbol("[");
            d.size = expr();
            expect_symbol("]");
            expect_symbol(";");
            return make(pos, std::move(d));
        }
        if (accept_keyword("const")) {
            ConstDecl d{identifier("constant name"), nullptr};
            expect_symbol("=");
            d.value = expr();
            expect_symbol(";");
            return make(pos, std::move(d));
        }
        if (accept_keyword("if"))
            return make(pos, if_rest());
        if (accept_keyword("for")) {
            For f;
            f.var = identifier("loop variable");
            expect_symbol("=");
            f.from = expr();
            expect_keyword("to");
            f.to = expr();
            if (accept_keyword("step"))
                f.step = expr();
            f.body = block();
            return make(pos, std::move(f));
        }
        if (accept_keyword("while")) {
            While w;
            w.cond = expr();
            w.body = block();
            return make(pos, std::move(w));
        }
        if (accept_keyword("measure")) {
            Measure m;
            m.reg = expr();
            if (accept_symbol(","))
                m.into = identifier("variable name");
            expect_symbol(";");
            return make(pos, std::move(m));
        }
        if (accept_keyword("reset")) {
            expect_symbol(";");
            return make(pos, Reset{});
        }
        if (accept_keyword("dump")) {
            expect_symbol(";");
            return make(pos, Dump{});
        }
        if (accept_keyword("exit")) {
            expect_symbol(";");
            return make(pos, Exit{});
        }
        if (accept_keyword("print")) {
            Print p;
            do {
                p.items.push_back(expr());
            } while (accept_symbol(","));
            expect_symbol(";");
            return make(pos, std::move(p));
        }
        if (accept_keyword("return")) {
            Return r{expr()};
            expect_symbol(";");
            return make(pos, std::move(r));
        }
        if (accept_symbol("!")) {
            CallStmt c{identifier("operator name"), {}, true};
            c.args = call_args();
            expect_symbol(";");
            return make(pos, std::move(c));
        }
        if (t.kind == TokenKind::Identifier) {
            std::string name = identifier();
            if (accept_symbol("=")) {
                Assign a{std::move(name), expr()};
                expect_symbol(";");
                return make(pos, std::move(a));
            }
            if (peek().is_symbol("(")) {
                CallStmt c{std::move(name), call_args(), false};
                expect_symbol(";");
                return make(pos, std::move(c));
            }
            fail("'=' or '('");
        }
        fail("statement");
    }

    If if_rest() {
        If node;
        node.cond = expr();
        node.then_block = block();
        if (accept_keyword("else")) {
            if (peek().is_keyword("if")) {
                const SourcePos pos = here();
                ++i_;
                Block chained;
                chained.push_back(make(pos, if_rest()));
                node.else_block = std::move(chained);
            } else {
                node.else_block = block();
            }
        }
        return node;
    }

    std::vector<ExprPtr> call_args() {
        expect_symbol("(");
        std::vector<ExprPtr> args;
        if (accept_symbol(")"))
            return args;
        do {
            args.push_back(expr());
        } while (accept_symbol(","));
        expect_symbol(")");
        return args;
    }

    ExprPtr node(SourcePos pos, auto n) {
        auto e = std::make_unique<Expr>();
        e->node = std::move(n);
        e->pos = pos;
        return e;
    }

    ExprPtr binary(SourcePos pos, BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
        return node(pos, Binary{op, std::move(lhs), std::move(rhs)});
    }

    ExprPtr expr() { return or_expr(); }

    ExprPtr or_expr() {
        auto lhs = xor_expr();
        while (true) {
            const SourcePos pos = here();
            if (!accept_keyword("or"))
                return lhs;
            lhs = binary(pos, BinaryOp::Or, std::move(lhs), xor_expr());
        }
    }

    ExprPtr xor_expr() {
        auto lhs = and_expr();
        while (true) {
            const SourcePos pos = here();
            if (!accept_keyword("xor"))
                return lhs;
            lhs = binary(pos, BinaryOp::Xor, std::move(lhs), and_expr());
        }
    }

    ExprPtr and_expr() {
        auto lhs = comparison();
        while (true) {
            const SourcePos pos = here();
            if (!accept_keyword("and"))
                return lhs;
            lhs = binary(pos, BinaryOp::And, std::move(lhs), comparison());
        }
    }

    ExprPtr comparison() {
        auto lhs = concat();
        static const std::pair<const char*, BinaryOp> ops[] = {
            {"==", BinaryOp::Eq}, {"!=", BinaryOp::Ne}, {"<=", BinaryOp::Le},
            {">=", BinaryOp::Ge}, {"<", BinaryOp::Lt},  {">", BinaryOp::Gt},
        };
        const SourcePos pos = here();
        for (const auto& [sym, op] : ops)
            if (accept_symbol(sym))
                return binary(pos, op, std::move(lhs), concat());
        return lhs;
    }

    ExprPtr concat() {
        auto lhs = additive();
        while (true) {
            const SourcePos pos = here();
            if (!accept_symbol("&"))
                return lhs;
            lhs = binary(pos, BinaryOp::Concat, std::move(lhs), additive());
        }
    }

    ExprPtr additive() {
        auto lhs = multiplicative();
        while (true) {
            const SourcePos pos = here();
            if (accept_symbol("+"))
                lhs = binary(pos, BinaryOp::Add, std::move(lhs), multiplicative());
            else if (accept_symbol("-"))
                lhs = binary(pos, BinaryOp::Sub, std::move(lhs), multiplicative());
            else
                return lhs;
        }
    }

    ExprPtr multiplicative() {
        auto lhs = power();
        while (true) {
            const SourcePos pos = here();
            if (accept_symbol("*"))
                lhs = binary(pos, BinaryOp::Mul, std::move(lhs), power());
            else if (accept_symbol("/"))
                lhs = binary(pos, BinaryOp::Div, std::move(lhs), power());
            else if (accept_keyword("mod"))
                lhs = binary(pos, BinaryOp::Mod, std::move(lhs), power());
            else
                return lhs;
        }
    }

    ExprPtr power() {
        auto base = unary();
        const SourcePos pos = here();
        if (accept_symbol("^"))
            return binary(pos, BinaryOp::Pow, std::move(base), power());
        return base;
    }

    ExprPtr unary() {
        const SourcePos pos = here();
        if (accept_symbol("-"))
            return node(pos, Unary{UnaryOp::Neg, unary()});
        if (accept_keyword("not"))
            return node(pos, Unary{UnaryOp::Not, unary()});
        if (accept_symbol("#"))
            return node(pos, Unary{UnaryOp::Length, unary()});
        return postfix();
    }

    ExprPtr postfix() {
        auto base = primary();
        while (true) {
            const SourcePos pos = here();
            if (!accept_symbol("["))
                return base;
            auto first = expr();
            if (accept_symbol(":")) {
                auto last = expr();
                expect_symbol("]");
                base = node(pos, Slice{std::move(base), std::move(first), std::move(last)});
            } else {
                expect_symbol("]");
                base = node(pos, Index{std::move(base), std::move(first)});
            }
        }
    }

    ExprPtr primary() {
        const SourcePos pos = here();
        if (at_end())
            fail("expression");
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::IntLiteral: {
                ++i_;
                std::int64_t v = 0;
                auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
                if (ec != std::errc())
                    throw Error(ErrorCode::Syntax, "integer literal out of range", pos);
                return node(pos, IntLit{v});
            }
            case TokenKind::RealLiteral:
                ++i_;
                return node(pos, RealLit{std::strtod(t.text.c_str(), nullptr)});
            case TokenKind::StringLiteral:
                ++i_;
                return node(pos, StringLit{t.text});
            case TokenKind::Identifier: {
                std::string name = identifier();
                if (name == "true" || name == "false")
                    return node(pos, BoolLit{name == "true"});
                if (peek().is_symbol("("))
                    return node(pos, Call{std::move(name), call_args()});
                return node(pos, VarRef{std::move(name)});
            }
            case TokenKind::Symbol:
                if (accept_symbol("(")) {
                    auto inner = expr();
                    if (accept_symbol(",")) {
                        auto im = expr();
                        expect_symbol(")");
                        return node(pos, ComplexLit{std::move(inner), std::move(im)});
                    }
                    expect_symbol(")");
                    return inner;
                }
                break;
            default:
                break;
        }
        fail("expression");
    }

    const std::vector<Token>& toks_;
    std::size_t i_ = 0;
};

}  // namespace

Program parse_program(const std::vector<Token>& tokens) {
    return Parser(tokens).program();
}

Program parse_program(std::string_view source) {
    return parse_program(tokenize(source));
}

Program parse_interactive(std::string_view line) {
    return parse_program(tokenize(line));
}

}  // namespace qclite
