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

#include "qclite/interp/static_check.hpp"

#include <set>

#include "qclite/interp/builtins.hpp"
#include "qclite/stdgates.hpp"

namespace qclite {

using namespace ast;

std::string Diagnostic::to_string() const {
    std::string out;
    if (pos.valid())
        out += std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": ";
    return out + "[" + rule + "] " + message;
}

namespace {

void collect_declared(const Block& block, std::set<std::string>& names) {
    for (const auto& s : block) {
        if (const auto* d = get<VarDecl>(*s))
            names.insert(d->name);
        else if (const auto* c = get<ConstDecl>(*s))
            names.insert(c->name);
        else if (const auto* r = get<RegisterDecl>(*s))
            names.insert(r->name);
        else if (const auto* i = get<If>(*s)) {
            collect_declared(i->then_block, names);
            if (i->else_block)
                collect_declared(*i->else_block, names);
        } else if (const auto* f = get<For>(*s))
            collect_declared(f->body, names);
        else if (const auto* w = get<While>(*s))
            collect_declared(w->body, names);
    }
}

bool assigns_outside(const Block& block, const std::set<std::string>& local) {
    for (const auto& s : block) {
        if (const auto* a = get<Assign>(*s)) {
            if (!local.count(a->name))
                return true;
        } else if (const auto* m = get<Measure>(*s)) {
            if (m->into && !local.count(*m->into))
                return true;
        } else if (const auto* i = get<If>(*s)) {
            if (assigns_outside(i->then_block, local) || (i->else_block && assigns_outside(*i->else_block, local)))
                return true;
        } else if (const auto* f = get<For>(*s)) {
            if (!local.count(f->var) || assigns_outside(f->body, local))
                return true;
        } else if (const auto* w = get<While>(*s)) {
            if (assigns_outside(w->body, local))
                return true;
        }
    }
    return false;
}

}  // namespace

bool mutates_enclosing_state(const Block& block) {
    std::set<std::string> local;
    collect_declared(block, local);
    return assigns_outside(block, local);
}

class CheckWalker {
public:
    CheckWalker(std::map<std::string, GlobalSymbol>& globals, std::map<std::string, SubroutineInfo>& subs,
                std::vector<Diagnostic>& out)
        : globals_(globals), subs_(subs), out_(out) {}

    void program(const Program& prog) {
        std::set<std::string> seen;
        for (const auto& sub : prog.subroutines()) {
            if (find_builtin(sub->name) || is_expression_builtin(sub->name) || subs_.count(sub->name) ||
                seen.count(sub->name)) {
                report(rule::kRedeclared, "subroutine '" + sub->name + "' is already defined", sub->pos);
                continue;
            }
            seen.insert(sub->name);
            subs_[sub->name] = info_of(*sub);
        }
        for (const auto& item : prog.items) {
            if (const auto* sub = std::get_if<SubroutinePtr>(&item))
                subroutine(**sub);
            else
                top_statement(*std::get<StmtPtr>(item));
        }
    }

private:
    struct Symbol {
        GlobalSymbol::Kind kind = GlobalSymbol::Kind::Variable;
        std::optional<ClassicalType> ctype;
        QuType qtype = QuType::Qureg;
    };

    enum class Kind { Classical, Register, Condition, String, Unknown };

    struct Info {
        Kind kind = Kind::Unknown;
        std::optional<ClassicalType> ctype;
        bool quconst = false;  // register built from a quconst parameter
    };

    struct Frame {
        const Subroutine* sub = nullptr;
        Level level = Level::Procedure;
        int quantum_if_depth = 0;
    };

    static SubroutineInfo info_of(const Subroutine& sub) {
        SubroutineInfo info;
        info.level = sub.level;
        info.is_cond = sub.is_cond;
        info.return_type = sub.return_type;
        for (const auto& p : sub.params)
            info.params.push_back(p.type);
        return info;
    }

    void report(const char* rule, std::string message, SourcePos pos) {
        out_.push_back({rule, std::move(message), pos});
    }

    bool in_subroutine() const { return frame_.sub != nullptr; }
    bool restricted() const { return in_subroutine() && frame_.level != Level::Procedure; }
    bool cond_context() const { return frame_.quantum_if_depth > 0 || (frame_.sub && frame_.sub->is_cond); }

    void subroutine(const Subroutine& sub) {
        frame_ = Frame{&sub, sub.level, 0};
        scopes_.clear();
        scopes_.emplace_back();
        bool has_quvoid = false;
        for (const auto& p : sub.params)
            if (const auto* qt = std::get_if<QuType>(&p.type); qt && *qt == QuType::Quvoid)
                has_quvoid = true;
        for (const auto& p : sub.params) {
            if (scopes_.back().count(p.name))
                report(rule::kRedeclared, "parameter '" + p.name + "' is declared twice", p.pos);
            Symbol sym;
            if (const auto* qt = std::get_if<QuType>(&p.type)) {
                sym.kind = GlobalSymbol::Kind::Register;
                sym.qtype = *qt;
                if (sub.level == Level::Function)
                    report(rule::kType, "function '" + sub.name + "' cannot take a register parameter", p.pos);
                if (*qt == QuType::Quscratch && (sub.level != Level::Qufunct || !has_quvoid))
                    report(rule::kQuvoidPosition, "quscratch parameter '" + p.name +
                                                      "' requires a qufunct with a quvoid parameter",
                           p.pos);
            } else {
                sym.ctype = std::get<ClassicalType>(p.type);
            }
            scopes_.back()[p.name] = sym;
        }
        block(sub.body, false);
        frame_ = Frame{};
        scopes_.clear();
    }

    void top_statement(const Stmt& s) {
        frame_ = Frame{};
        scopes_.clear();
        statement(s);
    }

    void block(const Block& b, bool new_scope = true) {
        if (new_scope)
            scopes_.emplace_back();
        for (const auto& s : b)
            statement(*s);
        if (new_scope)
            scopes_.pop_back();
    }

    void declare(const std::string& name, Symbol sym, SourcePos pos) {
        if (scopes_.empty()) {
            if (globals_.count(name) || subs_.count(name))
                report(rule::kRedeclared, "'" + name + "' is already declared", pos);
            globals_[name] = GlobalSymbol{sym.kind, sym.ctype};
            return;
        }
        if (scopes_.back().count(name))
            report(rule::kRedeclared, "'" + name + "' is already declared in this scope", pos);
        scopes_.back()[name] = sym;
    }

    std::optional<Symbol> lookup(const std::string& name, SourcePos pos, bool report_missing = true) {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
            if (auto f = it->find(name); f != it->end())
                return f->second;
        if (auto g = globals_.find(name); g != globals_.end()) {
            if (restricted() && g->second.kind != GlobalSymbol::Kind::Constant)
                report(rule::kGlobals,
                       std::string(to_string(frame_.level)) + " '" + frame_.sub->name + "' uses global '" + name + "'",
                       pos);
            return Symbol{g->second.kind, g->second.type, QuType::Qureg};
        }
        if (name == "pi")
            return Symbol{GlobalSymbol::Kind::Constant, ClassicalType::Real, QuType::Qureg};
        if (report_missing)
            report(rule::kUndeclared, "'" + name + "' is not declared", pos);
        return std::nullopt;
    }

    static bool numeric(const Info& i) {
        return i.kind == Kind::Classical && i.ctype && *i.ctype != ClassicalType::Boolean;
    }

    static ClassicalType promote(ClassicalType a, ClassicalType b) {
        return static_cast<ClassicalType>(std::max(static_cast<int>(a), static_cast<int>(b)));
    }

    static bool assignable(ClassicalType target, const Info& value) {
        if (value.kind == Kind::Unknown || !value.ctype)
            return value.kind == Kind::Unknown;
        if (value.kind != Kind::Classical)
            return false;
        const ClassicalType v = *value.ctype;
        if (target == ClassicalType::Boolean || v == ClassicalType::Boolean)
            return target == v;
        return static_cast<int>(v) <= static_cast<int>(target);
    }

    bool is_quantum(const Info& i) const { return i.kind == Kind::Register || i.kind == Kind::Condition; }

    void expect_int(const Info& i, const char* what, SourcePos pos) {
        if (i.kind == Kind::Unknown)
            return;
        if (i.kind != Kind::Classical || i.ctype != ClassicalType::Int)
            report(rule::kType, std::string(what) + " must be an int", pos);
    }

    Info expr(const Expr& e) {
        return std::visit([&](const auto& n) { return node(n, e.pos); }, e.node);
    }

    Info node(const IntLit&, SourcePos) { return {Kind::Classical, ClassicalType::Int}; }
    Info node(const RealLit&, SourcePos) { return {Kind::Classical, ClassicalType::Real}; }
    Info node(const BoolLit&, SourcePos) { return {Kind::Classical, ClassicalType::Boolean}; }
    Info node(const StringLit&, SourcePos) { return {Kind::String, std::nullopt}; }

    Info node(const ComplexLit& n, SourcePos pos) {
        for (const auto* part : {n.re.get(), n.im.get()}) {
            const Info i = expr(*part);
            if (i.kind != Kind::Unknown && (!numeric(i) || i.ctype == ClassicalType::Complex))
                report(rule::kType, "complex literal parts must be int or real", pos);
        }
        return {Kind::Classical, ClassicalType::Complex};
    }

    Info node(const VarRef& n, SourcePos pos) {
        const auto sym = lookup(n.name, pos);
        if (!sym)
            return {};
        if (sym->kind == GlobalSymbol::Kind::Register)
            return {Kind::Register, std::nullopt, sym->qtype == QuType::Quconst};
        if (!sym->ctype)
            return {};
        return {Kind::Classical, sym->ctype};
    }

    Info node(const Unary& n, SourcePos pos) {
        const Info a = expr(*n.operand);
        if (a.kind == Kind::Unknown)
            return n.op == UnaryOp::Length ? Info{Kind::Classical, ClassicalType::Int} : Info{};
        switch (n.op) {
            case UnaryOp::Length:
                if (a.kind != Kind::Register)
                    report(rule::kType, "'#' needs a register", pos);
                return {Kind::Classical, ClassicalType::Int};
            case UnaryOp::Not:
                if (is_quantum(a))
                    return {Kind::Condition, std::nullopt};
                if (a.ctype != ClassicalType::Boolean)
                    report(rule::kType, "'not' needs a boolean or a quantum condition", pos);
                return {Kind::Classical, ClassicalType::Boolean};
            case UnaryOp::Neg:
                if (!numeric(a))
                    report(rule::kType, "'-' needs a number", pos);
                return a.kind == Kind::Classical ? a : Info{};
        }
        return {};
    }

    Info node(const Binary& n, SourcePos pos) {
        const Info a = expr(*n.lhs);
        const Info b = expr(*n.rhs);
        const bool unknown = a.kind == Kind::Unknown || b.kind == Kind::Unknown;
        switch (n.op) {
            case BinaryOp::And:
            case BinaryOp::Or:
            case BinaryOp::Xor:
                if (is_quantum(a) || is_quantum(b)) {
                    for (const Info* x : {&a, &b})
                        if (x->kind == Kind::Classical && x->ctype != ClassicalType::Boolean)
                            report(rule::kType, std::string("'") + spelling(n.op) + "' needs boolean operands", pos);
                    return {Kind::Condition, std::nullopt};
                }
                if (!unknown && (a.ctype != ClassicalType::Boolean || b.ctype != ClassicalType::Boolean))
                    report(rule::kType, std::string("'") + spelling(n.op) + "' needs boolean operands", pos);
                return {Kind::Classical, ClassicalType::Boolean};
            case BinaryOp::Concat:
                if (!unknown && (a.kind != Kind::Register || b.kind != Kind::Register))
                    report(rule::kType, "'&' joins registers only", pos);
                return {Kind::Register, std::nullopt, a.quconst || b.quconst};
            case BinaryOp::Eq:
            case BinaryOp::Ne:
            case BinaryOp::Lt:
            case BinaryOp::Le:
            case BinaryOp::Gt:
            case BinaryOp::Ge: {
                if (unknown)
                    return {Kind::Classical, ClassicalType::Boolean};
                const bool eq = n.op == BinaryOp::Eq || n.op == BinaryOp::Ne;
                const bool ok = eq ? (a.kind == Kind::Classical && b.kind == Kind::Classical &&
                                      (a.ctype == ClassicalType::Boolean) == (b.ctype == ClassicalType::Boolean))
                                   : (numeric(a) && numeric(b) && a.ctype != ClassicalType::Complex &&
                                      b.ctype != ClassicalType::Complex);
                if (!ok)
                    report(rule::kType, std::string("cannot compare with '") + spelling(n.op) + "'", pos);
                return {Kind::Classical, ClassicalType::Boolean};
            }
            default: break;
        }
        if (unknown)
            return {};
        if (!numeric(a) || !numeric(b)) {
            report(rule::kType, std::string("'") + spelling(n.op) + "' needs numeric operands", pos);
            return {};
        }
        if (n.op == BinaryOp::Mod) {
            if (a.ctype != ClassicalType::Int || b.ctype != ClassicalType::Int)
                report(rule::kType, "'mod' needs int operands", pos);
            return {Kind::Classical, ClassicalType::Int};
        }
        ClassicalType t = promote(*a.ctype, *b.ctype);
        // int ^ negative int is real; decided at run time.
        if (n.op == BinaryOp::Pow && t == ClassicalType::Int)
            return {};
        return {Kind::Classical, t};
    }

    Info node(const Index& n, SourcePos pos) {
        const Info base = expr(*n.base);
        expect_int(expr(*n.index), "register index", pos);
        if (base.kind != Kind::Unknown && base.kind != Kind::Register)
            report(rule::kType, "only registers can be indexed", pos);
        return {Kind::Register, std::nullopt, base.quconst};
    }

    Info node(const Slice& n, SourcePos pos) {
        const Info base = expr(*n.base);
        expect_int(expr(*n.first), "slice bound", pos);
        expect_int(expr(*n.last), "slice bound", pos);
        if (base.kind != Kind::Unknown && base.kind != Kind::Register)
            report(rule::kType, "only registers can be sliced", pos);
        return {Kind::Register, std::nullopt, base.quconst};
    }

    Info node(const Call& n, SourcePos pos) {
        if (n.name == "random") {
            if (restricted())
                report(rule::kRandom, "random() is not allowed in " + std::string(to_string(frame_.level)) + " '" +
                                          frame_.sub->name + "'",
                       pos);
            if (!n.args.empty())
                report(rule::kArity, "random() takes no arguments", pos);
            return {Kind::Classical, ClassicalType::Real};
        }
        if (const auto* math = find_math_builtin(n.name)) {
            if (n.args.size() != 1) {
                report(rule::kArity, n.name + "() takes one argument", pos);
                return {Kind::Classical, math->result};
            }
            const Info a = expr(*n.args[0]);
            if (a.kind != Kind::Unknown && (!numeric(a) || a.ctype == ClassicalType::Complex))
                report(rule::kType, n.name + "() needs an int or real argument", pos);
            return {Kind::Classical, math->result};
        }
        auto it = subs_.find(n.name);
        if (it == subs_.end()) {
            for (const auto& a : n.args)
                expr(*a);
            if (find_builtin(n.name))
                report(rule::kType, "'" + n.name + "' is an operator and has no value", pos);
            else
                report(rule::kUndeclared, "function '" + n.name + "' is not defined", pos);
            return {};
        }
        const SubroutineInfo& info = it->second;
        if (info.level != Level::Function) {
            report(rule::kType, std::string(to_string(info.level)) + " '" + n.name + "' has no value", pos);
            for (const auto& a : n.args)
                expr(*a);
            return {};
        }
        arguments(n.name, info, n.args, pos);
        return {Kind::Classical, info.return_type};
    }

    void arguments(const std::string& name, const SubroutineInfo& info, const std::vector<ExprPtr>& args,
                   SourcePos pos) {
        if (args.size() != info.params.size())
            report(rule::kArity,
                   "'" + name + "' expects " + std::to_string(info.params.size()) + " arguments, got " +
                       std::to_string(args.size()),
                   pos);
        for (std::size_t i = 0; i < args.size(); ++i) {
            const Info a = expr(*args[i]);
            if (i >= info.params.size() || a.kind == Kind::Unknown)
                continue;
            if (const auto* qt = std::get_if<QuType>(&info.params[i])) {
                if (a.kind != Kind::Register)
                    report(rule::kType, "argument " + std::to_string(i + 1) + " of '" + name + "' must be a register",
                           args[i]->pos);
                else if (a.quconst && *qt != QuType::Quconst)
                    report(rule::kQuconstTarget,
                           "quconst register passed as " + std::string(to_string(*qt)) + " argument " +
                               std::to_string(i + 1) + " of '" + name + "'",
                           args[i]->pos);
            } else if (!assignable(std::get<ClassicalType>(info.params[i]), a)) {
                report(rule::kType,
                       "argument " + std::to_string(i + 1) + " of '" + name + "' must be " +
                           to_string(std::get<ClassicalType>(info.params[i])),
                       args[i]->pos);
            }
        }
    }

    void call_statement(const CallStmt& n, SourcePos pos) {
        SubroutineInfo info;
        if (const auto* b = find_builtin(n.name)) {
            info.level = b->level;
            info.is_cond = true;
            info.builtin = true;
            for (int i = 0; i < b->angle_params; ++i)
                info.params.emplace_back(ClassicalType::Real);
            for (QuType t : b->register_params)
                info.params.emplace_back(t);
        } else if (auto it = subs_.find(n.name); it != subs_.end()) {
            info = it->second;
        } else {
            report(rule::kUndeclared, "subroutine '" + n.name + "' is not defined", pos);
            for (const auto& a : n.args)
                expr(*a);
            return;
        }

        if (info.level == Level::Function)
            report(rule::kType, "function '" + n.name + "' cannot be called as a statement", pos);
        else if (static_cast<int>(info.level) > static_cast<int>(frame_.level)) {
            const char* r = (info.builtin && frame_.level == Level::Qufunct) ? rule::kQufunctGates : rule::kHierarchy;
            report(r,
                   std::string(to_string(frame_.level)) + " '" + (frame_.sub ? frame_.sub->name : "") +
                       "' cannot call " + to_string(info.level) + " '" + n.name + "'",
                   pos);
        }
        if (n.inverted && info.level == Level::Procedure)
            report(rule::kType, "procedure '" + n.name + "' cannot be inverted", pos);

        if (frame_.quantum_if_depth > 0 && info.level == Level::Procedure)
            report(rule::kQuantumIfBody, "procedure '" + n.name + "' called inside a quantum if", pos);
        else if (cond_context() && !info.builtin && info.level != Level::Function && !info.is_cond)
            report(rule::kCondRequired,
                   std::string(to_string(info.level)) + " '" + n.name + "' must be declared cond to run conditionally",
                   pos);

        arguments(n.name, info, n.args, pos);
    }

    void forbid_in_quantum_if(const char* what, SourcePos pos) {
        if (frame_.quantum_if_depth > 0)
            report(rule::kQuantumIfBody, std::string(what) + " inside a quantum if", pos);
    }

    void forbid_restricted(const char* rule, const char* what, SourcePos pos) {
        if (restricted())
            report(rule,
                   std::string(what) + " is not allowed in " + to_string(frame_.level) + " '" + frame_.sub->name + "'",
                   pos);
    }

    void assign_target(const std::string& name, const Info& value, SourcePos pos, bool loop_var) {
        const auto sym = lookup(name, pos);
        if (!sym)
            return;
        if (sym->kind == GlobalSymbol::Kind::Constant) {
            report(rule::kConstAssign, "cannot assign to constant '" + name + "'", pos);
            return;
        }
        if (sym->kind == GlobalSymbol::Kind::Register) {
            report(rule::kType, "cannot assign to register '" + name + "'", pos);
            return;
        }
        if (loop_var) {
            if (sym->ctype != ClassicalType::Int)
                report(rule::kType, "loop variable '" + name + "' must be an int", pos);
            return;
        }
        if (sym->ctype && !assignable(*sym->ctype, value))
            report(rule::kType, "cannot assign to " + std::string(to_string(*sym->ctype)) + " '" + name + "'", pos);
    }

    void statement(const Stmt& s) {
        const SourcePos pos = s.pos;
        std::visit(
            [&](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, VarDecl>) {
                    if (n.init) {
                        const Info i = expr(*n.init);
                        if (!assignable(n.type, i))
                            report(rule::kType, "cannot initialize " + std::string(to_string(n.type)) + " '" + n.name + "'",
                                   pos);
                    }
                    declare(n.name, Symbol{GlobalSymbol::Kind::Variable, n.type, QuType::Qureg}, pos);
                } else if constexpr (std::is_same_v<T, ConstDecl>) {
                    const Info i = expr(*n.value);
                    if (i.kind != Kind::Classical && i.kind != Kind::Unknown)
                        report(rule::kType, "constant '" + n.name + "' must be classical", pos);
                    declare(n.name, Symbol{GlobalSymbol::Kind::Constant, i.ctype, QuType::Qureg}, pos);
                } else if constexpr (std::is_same_v<T, RegisterDecl>) {
                    expect_int(expr(*n.size), "register size", pos);
                    if (n.type == QuType::Quvoid || n.type == QuType::Quscratch)
                        report(rule::kQuvoidPosition,
                               std::string(to_string(n.type)) + " is only valid as a parameter type", pos);
                    else if (n.type == QuType::Quconst)
                        report(rule::kType, "quconst is only valid as a parameter type", pos);
                    if (frame_.level == Level::Function && in_subroutine())
                        report(rule::kType, "functions cannot declare registers", pos);
                    declare(n.name, Symbol{GlobalSymbol::Kind::Register, std::nullopt, QuType::Qureg}, pos);
                } else if constexpr (std::is_same_v<T, Assign>) {
                    assign_target(n.name, expr(*n.value), pos, false);
                } else if constexpr (std::is_same_v<T, CallStmt>) {
                    call_statement(n, pos);
                } else if constexpr (std::is_same_v<T, If>) {
                    if_statement(n, pos);
                } else if constexpr (std::is_same_v<T, For>) {
                    assign_target(n.var, {}, pos, true);
                    expect_int(expr(*n.from), "loop bound", pos);
                    expect_int(expr(*n.to), "loop bound", pos);
                    if (n.step)
                        expect_int(expr(*n.step), "loop step", pos);
                    block(n.body);
                } else if constexpr (std::is_same_v<T, While>) {
                    const Info c = expr(*n.cond);
                    if (is_quantum(c))
                        report(rule::kLoopGuard, "a quantum condition cannot guard a loop", pos);
                    else if (c.kind == Kind::Classical && c.ctype != ClassicalType::Boolean)
                        report(rule::kType, "loop condition must be boolean", pos);
                    block(n.body);
                } else if constexpr (std::is_same_v<T, Measure>) {
                    forbid_restricted(rule::kMeasureReset, "measure", pos);
                    forbid_in_quantum_if("measure", pos);
                    const Info r = expr(*n.reg);
                    if (r.kind != Kind::Unknown && r.kind != Kind::Register)
                        report(rule::kType, "measure needs a register", pos);
                    if (n.into)
                        assign_target(*n.into, {Kind::Classical, ClassicalType::Int}, pos, false);
                } else if constexpr (std::is_same_v<T, Reset>) {
                    forbid_restricted(rule::kMeasureReset, "reset", pos);
                    forbid_in_quantum_if("reset", pos);
                } else if constexpr (std::is_same_v<T, Dump>) {
                    forbid_restricted(rule::kSideEffect, "dump", pos);
                    forbid_in_quantum_if("dump", pos);
                } else if constexpr (std::is_same_v<T, Print>) {
                    forbid_restricted(rule::kSideEffect, "print", pos);
                    forbid_in_quantum_if("print", pos);
                    for (const auto& item : n.items) {
                        const Info i = expr(*item);
                        if (is_quantum(i))
                            report(rule::kType, "print takes classical values", item->pos);
                    }
                } else if constexpr (std::is_same_v<T, Return>) {
                    const Info i = expr(*n.value);
                    if (!frame_.sub || frame_.level != Level::Function)
                        report(rule::kReturn, "return outside of a function", pos);
                    else if (frame_.sub->return_type && !assignable(*frame_.sub->return_type, i))
                        report(rule::kType, "function '" + frame_.sub->name + "' must return " +
                                                to_string(*frame_.sub->return_type),
                               pos);
                } else if constexpr (std::is_same_v<T, Exit>) {
                    forbid_restricted(rule::kSideEffect, "exit", pos);
                    forbid_in_quantum_if("exit", pos);
                }
            },
            s.node);
    }

    void if_statement(const If& n, SourcePos pos) {
        const Info c = expr(*n.cond);
        if (!is_quantum(c)) {
            if (c.kind == Kind::Classical && c.ctype != ClassicalType::Boolean)
                report(rule::kType, "if condition must be boolean", pos);
            block(n.then_block);
            if (n.else_block)
                block(*n.else_block);
            return;
        }
        const bool forking = mutates_enclosing_state(n.then_block) || (n.else_block && mutates_enclosing_state(*n.else_block));
        if (forking && !(in_subroutine() && (frame_.level == Level::Operator || frame_.level == Level::Qufunct)))
            report(rule::kForkPlacement, "a forking quantum if must be inside an operator or qufunct", pos);
        ++frame_.quantum_if_depth;
        block(n.then_block);
        if (n.else_block)
            block(*n.else_block);
        --frame_.quantum_if_depth;
    }

    std::map<std::string, GlobalSymbol>& globals_;
    std::map<std::string, SubroutineInfo>& subs_;
    std::vector<Diagnostic>& out_;
    Frame frame_;
    std::vector<std::map<std::string, Symbol>> scopes_;
};

StaticChecker::StaticChecker() = default;

std::vector<Diagnostic> StaticChecker::check(const Program& program, bool commit) {
    auto globals = globals_;
    auto subs = subs_;
    std::vector<Diagnostic> out;
    CheckWalker(globals, subs, out).program(program);
    if (out.empty() && commit) {
        globals_ = std::move(globals);
        subs_ = std::move(subs);
    }
    return out;
}

std::vector<Diagnostic> check_static_semantics(const Program& program) {
    return StaticChecker().check(program, false);
}

}  // namespace qclite
