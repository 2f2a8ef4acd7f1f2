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

#include <cstdio>
#include <sstream>

#include "qclite/syntax/parser.hpp"

namespace qclite {

using namespace ast;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string real_text(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s = buf;
    if (s.find_first_of(".eEn") == std::string::npos)
        s += ".0";
    return s;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out + "\"";
}

std::string type_name(const std::variant<ClassicalType, QuType>& t) {
    return std::visit([](auto v) { return std::string(to_string(v)); }, t);
}

class SourcePrinter {
public:
    std::string program(const Program& prog) {
        for (const auto& item : prog.items) {
            if (const auto* sub = std::get_if<SubroutinePtr>(&item))
                subroutine(**sub);
            else
                stmt(*std::get<StmtPtr>(item), 0);
        }
        return os_.str();
    }

    static std::string expr(const Expr& e) {
        return std::visit(
            overloaded{
                [](const IntLit& n) { return std::to_string(n.value); },
                [](const RealLit& n) { return real_text(n.value); },
                [](const BoolLit& n) { return std::string(n.value ? "true" : "false"); },
                [](const StringLit& n) { return quoted(n.value); },
                [](const ComplexLit& n) { return "(" + expr(*n.re) + ", " + expr(*n.im) + ")"; },
                [](const VarRef& n) { return n.name; },
                [](const Unary& n) { return "(" + std::string(spelling(n.op)) + expr(*n.operand) + ")"; },
                [](const Binary& n) {
                    return "(" + expr(*n.lhs) + " " + spelling(n.op) + " " + expr(*n.rhs) + ")";
                },
                [](const Index& n) { return expr(*n.base) + "[" + expr(*n.index) + "]"; },
                [](const Slice& n) { return expr(*n.base) + "[" + expr(*n.first) + ":" + expr(*n.last) + "]"; },
                [](const Call& n) { return n.name + args(n.args); },
            },
            e.node);
    }

private:
    static std::string args(const std::vector<ExprPtr>& list) {
        std::string out = "(";
        for (std::size_t i = 0; i < list.size(); ++i)
            out += (i ? ", " : "") + expr(*list[i]);
        return out + ")";
    }

    void indent(int depth) { os_ << std::string(static_cast<std::size_t>(depth) * 2, ' '); }

    void subroutine(const Subroutine& sub) {
        if (sub.is_cond)
            os_ << "cond ";
        if (sub.level == Level::Function)
            os_ << to_string(*sub.return_type);
        else
            os_ << to_string(sub.level);
        os_ << " " << sub.name << "(";
        for (std::size_t i = 0; i < sub.params.size(); ++i)
            os_ << (i ? ", " : "") << type_name(sub.params[i].type) << " " << sub.params[i].name;
        os_ << ") ";
        block(sub.body, 0);
        os_ << "\n";
    }

    void block(const Block& b, int depth) {
        os_ << "{\n";
        for (const auto& s : b)
            stmt(*s, depth + 1);
        indent(depth);
        os_ << "}";
    }

    void stmt(const Stmt& s, int depth) {
        indent(depth);
        std::visit(overloaded{
                       [&](const VarDecl& n) {
                           os_ << to_string(n.type) << " " << n.name;
                           if (n.init)
                               os_ << " = " << expr(*n.init);
                           os_ << ";";
                       },
                       [&](const ConstDecl& n) { os_ << "const " << n.name << " = " << expr(*n.value) << ";"; },
                       [&](const RegisterDecl& n) {
                           os_ << to_string(n.type) << " " << n.name << "[" << expr(*n.size) << "];";
                       },
                       [&](const Assign& n) { os_ << n.name << " = " << expr(*n.value) << ";"; },
                       [&](const CallStmt& n) { os_ << (n.inverted ? "!" : "") << n.name << args(n.args) << ";"; },
                       [&](const If& n) {
                           os_ << "if " << expr(*n.cond) << " ";
                           block(n.then_block, depth);
                           if (n.else_block) {
                               os_ << " else ";
                               block(*n.else_block, depth);
                           }
                       },
                       [&](const For& n) {
                           os_ << "for " << n.var << " = " << expr(*n.from) << " to " << expr(*n.to);
                           if (n.step)
                               os_ << " step " << expr(*n.step);
                           os_ << " ";
                           block(n.body, depth);
                       },
                       [&](const While& n) {
                           os_ << "while " << expr(*n.cond) << " ";
                           block(n.body, depth);
                       },
                       [&](const Measure& n) {
                           os_ << "measure " << expr(*n.reg);
                           if (n.into)
                               os_ << ", " << *n.into;
                           os_ << ";";
                       },
                       [&](const Reset&) { os_ << "reset;"; },
                       [&](const Dump&) { os_ << "dump;"; },
                       [&](const Print& n) {
                           os_ << "print ";
                           for (std::size_t i = 0; i < n.items.size(); ++i)
                               os_ << (i ? ", " : "") << expr(*n.items[i]);
                           os_ << ";";
                       },
                       [&](const Return& n) { os_ << "return " << expr(*n.value) << ";"; },
                       [&](const Exit&) { os_ << "exit;"; },
                   },
                   s.node);
        os_ << "\n";
    }

    std::ostringstream os_;
};

class SexprPrinter {
public:
    std::string program(const Program& prog) {
        std::string out = "(program";
        for (const auto& item : prog.items) {
            out += " ";
            if (const auto* sub = std::get_if<SubroutinePtr>(&item))
                out += subroutine(**sub);
            else
                out += stmt(*std::get<StmtPtr>(item));
        }
        return out + ")";
    }

private:
    static std::string list(const std::vector<ExprPtr>& xs) {
        std::string out;
        for (const auto& x : xs)
            out += " " + expr(*x);
        return out;
    }

    static std::string expr(const Expr& e) {
        return std::visit(
            overloaded{
                [](const IntLit& n) { return "(int " + std::to_string(n.value) + ")"; },
                [](const RealLit& n) { return "(real " + real_text(n.value) + ")"; },
                [](const BoolLit& n) { return std::string(n.value ? "(bool true)" : "(bool false)"); },
                [](const StringLit& n) { return "(str " + quoted(n.value) + ")"; },
                [](const ComplexLit& n) { return "(complex " + expr(*n.re) + " " + expr(*n.im) + ")"; },
                [](const VarRef& n) { return "(var " + n.name + ")"; },
                [](const Unary& n) { return "(unary " + std::string(spelling(n.op)) + " " + expr(*n.operand) + ")"; },
                [](const Binary& n) {
                    return "(binary " + std::string(spelling(n.op)) + " " + expr(*n.lhs) + " " + expr(*n.rhs) + ")";
                },
                [](const Index& n) { return "(index " + expr(*n.base) + " " + expr(*n.index) + ")"; },
                [](const Slice& n) {
                    return "(slice " + expr(*n.base) + " " + expr(*n.first) + " " + expr(*n.last) + ")";
                },
                [](const Call& n) { return "(call " + n.name + list(n.args) + ")"; },
            },
            e.node);
    }

    static std::string block(const Block& b) {
        std::string out = "(block";
        for (const auto& s : b)
            out += " " + stmt(*s);
        return out + ")";
    }

    static std::string stmt(const Stmt& s) {
        return std::visit(
            overloaded{
                [](const VarDecl& n) {
                    return "(var-decl " + std::string(to_string(n.type)) + " " + n.name +
                           (n.init ? " " + expr(*n.init) : "") + ")";
                },
                [](const ConstDecl& n) { return "(const " + n.name + " " + expr(*n.value) + ")"; },
                [](const RegisterDecl& n) {
                    return "(reg-decl " + std::string(to_string(n.type)) + " " + n.name + " " + expr(*n.size) + ")";
                },
                [](const Assign& n) { return "(assign " + n.name + " " + expr(*n.value) + ")"; },
                [](const CallStmt& n) {
                    return std::string(n.inverted ? "(call! " : "(call ") + n.name + list(n.args) + ")";
                },
                [](const If& n) {
                    return "(if " + expr(*n.cond) + " " + block(n.then_block) +
                           (n.else_block ? " " + block(*n.else_block) : "") + ")";
                },
                [](const For& n) {
                    return "(for " + n.var + " " + expr(*n.from) + " " + expr(*n.to) + " " +
                           (n.step ? expr(*n.step) : "nil") + " " + block(n.body) + ")";
                },
                [](const While& n) { return "(while " + expr(*n.cond) + " " + block(n.body) + ")"; },
                [](const Measure& n) { return "(measure " + expr(*n.reg) + (n.into ? " " + *n.into : "") + ")"; },
                [](const Reset&) { return std::string("(reset)"); },
                [](const Dump&) { return std::string("(dump)"); },
                [](const Print& n) { return "(print" + list(n.items) + ")"; },
                [](const Return& n) { return "(return " + expr(*n.value) + ")"; },
                [](const Exit&) { return std::string("(exit)"); },
            },
            s.node);
    }

    static std::string subroutine(const Subroutine& sub) {
        std::string out = "(sub " + std::string(sub.is_cond ? "cond " : "") + to_string(sub.level) + " " + sub.name;
        if (sub.return_type)
            out += std::string(" -> ") + to_string(*sub.return_type);
        out += " (params";
        for (const auto& p : sub.params)
            out += " (" + type_name(p.type) + " " + p.name + ")";
        return out + ") " + block(sub.body) + ")";
    }
};

}  // namespace

std::string print_program(const Program& program) {
    return SourcePrinter().program(program);
}

std::string print_expr(const Expr& expr) {
    return SourcePrinter::expr(expr);
}

std::string to_sexpr(const Program& program) {
    return SexprPrinter().program(program);
}

}  // namespace qclite
