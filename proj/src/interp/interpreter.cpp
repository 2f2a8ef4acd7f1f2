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

#include "qclite/interp/interpreter.hpp"

#include <cmath>
#include <numbers>

#include "qclite/interp/builtins.hpp"
#include "qclite/qcond/zhegalkin.hpp"
#include "qclite/stdgates.hpp"
#include "qclite/syntax/parser.hpp"

namespace qclite {

using namespace ast;

GateTape adjoint_of_tape(const GateTape& tape) {
    GateTape out;
    for (auto it = tape.ops().rbegin(); it != tape.ops().rend(); ++it) {
        if (const auto* g = std::get_if<PrimitiveGate>(&*it))
            out.push(adjoint(*g));
        else
            out.push(*it);
    }
    return out;
}

RegisterMap DeferredPool::allocate_register(int count) {
    return machine_.allocate_register(count);
}

void DeferredPool::release_register(const RegisterMap& reg) {
    if (depth_ > 0)
        pending_.push_back(reg);
    else
        machine_.release_register(reg);
}

void DeferredPool::leave() {
    if (--depth_ > 0)
        return;
    auto pending = std::move(pending_);
    pending_.clear();
    for (auto it = pending.rbegin(); it != pending.rend(); ++it)
        machine_.release_register(*it);
}

namespace {

enum class Flow { Normal, Return };

struct ExitSignal {};

struct Variable {
    Value value;
    bool constant = false;
    std::optional<ClassicalType> type;
};

struct Scope {
    std::map<std::string, Variable> vars;
    std::vector<RegisterMap> owned;
};

struct ForkState {
    std::vector<ForkDecision> prefix;
    std::size_t next = 0;
    std::vector<ForkDecision> made;
    std::vector<std::vector<ForkDecision>> alternatives;
};

struct Ctx {
    Level level = Level::Procedure;
    const Subroutine* sub = nullptr;
    GateSink* sink = nullptr;
    std::vector<Scope> scopes;
    bool top = false;
    int quantum_if_depth = 0;
    bool conditioned = false;
    ForkState* fork = nullptr;
    std::optional<Value> result;

    bool under_condition() const { return conditioned || quantum_if_depth > 0; }
};

class Recording {
public:
    explicit Recording(DeferredPool& pool) : pool_(pool) { pool_.enter(); }
    ~Recording() { pool_.leave(); }
    Recording(const Recording&) = delete;
    Recording& operator=(const Recording&) = delete;

private:
    DeferredPool& pool_;
};

Error type_error(const std::string& message) {
    return Error(ErrorCode::Type, message);
}

Value coerce(const Value& v, ClassicalType t, const std::string& what) {
    switch (t) {
        case ClassicalType::Int:
            if (v.is_int())
                return v;
            break;
        case ClassicalType::Real:
            if (v.is_int() || v.is_real())
                return Value(v.as_real());
            break;
        case ClassicalType::Complex:
            if (v.is_numeric())
                return Value(v.as_complex());
            break;
        case ClassicalType::Boolean:
            if (v.is_bool())
                return v;
            break;
    }
    throw type_error(what + " expects " + to_string(t) + ", got " + v.type_name());
}

Value default_value(ClassicalType t) {
    switch (t) {
        case ClassicalType::Int: return Value(std::int64_t{0});
        case ClassicalType::Real: return Value(0.0);
        case ClassicalType::Complex: return Value(std::complex<double>{});
        case ClassicalType::Boolean: return Value(false);
    }
    return {};
}

std::int64_t int_pow(std::int64_t base, std::int64_t exp) {
    std::int64_t r = 1;
    while (exp > 0) {
        if (exp & 1)
            r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

Value arithmetic(BinaryOp op, const Value& a, const Value& b) {
    if (!a.is_numeric() || !b.is_numeric())
        throw type_error(std::string("'") + spelling(op) + "' needs numbers, got " + a.type_name() + " and " +
                         b.type_name());
    if (op == BinaryOp::Mod) {
        if (!a.is_int() || !b.is_int())
            throw type_error("'mod' needs int operands");
        if (b.as_int() == 0)
            throw Error(ErrorCode::DivisionByZero, "modulus by zero");
        std::int64_t r = a.as_int() % b.as_int();
        if (r != 0 && ((r < 0) != (b.as_int() < 0)))
            r += b.as_int();
        return Value(r);
    }
    if (a.is_int() && b.is_int()) {
        const std::int64_t x = a.as_int(), y = b.as_int();
        switch (op) {
            case BinaryOp::Add: return Value(x + y);
            case BinaryOp::Sub: return Value(x - y);
            case BinaryOp::Mul: return Value(x * y);
            case BinaryOp::Div:
                if (y == 0)
                    throw Error(ErrorCode::DivisionByZero, "division by zero");
                return Value(x / y);
            case BinaryOp::Pow:
                if (y >= 0)
                    return Value(int_pow(x, y));
                return Value(std::pow(static_cast<double>(x), static_cast<double>(y)));
            default: break;
        }
    }
    if (a.is_complex() || b.is_complex()) {
        const auto x = a.as_complex(), y = b.as_complex();
        switch (op) {
            case BinaryOp::Add: return Value(x + y);
            case BinaryOp::Sub: return Value(x - y);
            case BinaryOp::Mul: return Value(x * y);
            case BinaryOp::Div:
                if (y == std::complex<double>{})
                    throw Error(ErrorCode::DivisionByZero, "division by zero");
                return Value(x / y);
            case BinaryOp::Pow: return Value(std::pow(x, y));
            default: break;
        }
    }
    const double x = a.as_real(), y = b.as_real();
    switch (op) {
        case BinaryOp::Add: return Value(x + y);
        case BinaryOp::Sub: return Value(x - y);
        case BinaryOp::Mul: return Value(x * y);
        case BinaryOp::Div:
            if (y == 0.0)
                throw Error(ErrorCode::DivisionByZero, "division by zero");
            return Value(x / y);
        case BinaryOp::Pow: return Value(std::pow(x, y));
        default: break;
    }
    throw type_error("unsupported operator");
}

Value comparison(BinaryOp op, const Value& a, const Value& b) {
    if (op == BinaryOp::Eq || op == BinaryOp::Ne) {
        bool eq;
        if (a.is_bool() && b.is_bool())
            eq = a.as_bool() == b.as_bool();
        else if (a.is_numeric() && b.is_numeric())
            eq = (a.is_int() && b.is_int()) ? a.as_int() == b.as_int() : a.as_complex() == b.as_complex();
        else
            throw type_error("cannot compare " + a.type_name() + " with " + b.type_name());
        return Value(op == BinaryOp::Eq ? eq : !eq);
    }
    if (!a.is_numeric() || !b.is_numeric() || a.is_complex() || b.is_complex())
        throw type_error("cannot order " + a.type_name() + " and " + b.type_name());
    if (a.is_int() && b.is_int()) {
        const auto x = a.as_int(), y = b.as_int();
        switch (op) {
            case BinaryOp::Lt: return Value(x < y);
            case BinaryOp::Le: return Value(x <= y);
            case BinaryOp::Gt: return Value(x > y);
            default: return Value(x >= y);
        }
    }
    const double x = a.as_real(), y = b.as_real();
    switch (op) {
        case BinaryOp::Lt: return Value(x < y);
        case BinaryOp::Le: return Value(x <= y);
        case BinaryOp::Gt: return Value(x > y);
        default: return Value(x >= y);
    }
}

std::int64_t expect_int(const Value& v, const char* what) {
    if (!v.is_int())
        throw type_error(std::string(what) + " must be an int, got " + v.type_name());
    return v.as_int();
}

const RegisterValue& expect_register(const Value& v, const char* what) {
    if (!v.is_register())
        throw type_error(std::string(what) + " must be a register, got " + v.type_name());
    return v.as_register();
}

std::optional<std::string> declared_name(const Stmt& s) {
    if (const auto* d = get<VarDecl>(s))
        return d->name;
    if (const auto* c = get<ConstDecl>(s))
        return c->name;
    if (const auto* r = get<RegisterDecl>(s))
        return r->name;
    return std::nullopt;
}

}  // namespace

struct Interpreter::Impl {
    Interpreter& self;
    MachineState& machine;
    std::ostream& out;
    DeferredPool pool;
    Scope globals;
    std::map<std::string, SubroutinePtr> subs;

    Impl(Interpreter& s, MachineState& m, std::ostream& o) : self(s), machine(m), out(o), pool(m) {}

    // ----- names -----

    Variable* find(const std::string& name, Ctx& ctx) {
        for (auto it = ctx.scopes.rbegin(); it != ctx.scopes.rend(); ++it)
            if (auto f = it->vars.find(name); f != it->vars.end())
                return &f->second;
        if (auto g = globals.vars.find(name); g != globals.vars.end()) {
            if (ctx.top || ctx.level == Level::Procedure || g->second.constant)
                return &g->second;
            throw Error(ErrorCode::Static, "global '" + name + "' is not visible in " + to_string(ctx.level) + " '" +
                                               ctx.sub->name + "'");
        }
        return nullptr;
    }

    Scope& current_scope(Ctx& ctx) { return ctx.scopes.empty() ? globals : ctx.scopes.back(); }

    void declare(Ctx& ctx, const std::string& name, Variable var) {
        Scope& scope = current_scope(ctx);
        if (scope.vars.count(name))
            throw Error(ErrorCode::Static, "'" + name + "' is already declared");
        scope.vars.emplace(name, std::move(var));
    }

    void close_scope(Ctx& ctx, Scope& scope) {
        for (auto it = scope.owned.rbegin(); it != scope.owned.rend(); ++it) {
            const RegisterMap& reg = *it;
            if (pool.depth() > 0) {
                ctx.sink->emit(EmptinessCheck{reg.qubits(), "local register " + reg.to_string() + " not empty at scope exit"});
                pool.release_register(reg);
            } else {
                if (machine.checks_enabled() && !machine.is_empty_register(reg))
                    throw Error(ErrorCode::NotEmpty, "local register " + reg.to_string() + " not empty at scope exit");
                machine.release_register(reg);
            }
        }
        scope.owned.clear();
    }

    // Leaves a scope after an error. Registers are only returned when nothing
    // has been applied to them yet.
    void abandon_scope(Scope& scope) {
        if (pool.depth() > 0)
            for (const auto& reg : scope.owned)
                pool.release_register(reg);
        scope.owned.clear();
    }

    // ----- expressions -----

    Value eval(const Expr& e, Ctx& ctx) {
        try {
            return std::visit([&](const auto& n) { return eval_node(n, ctx); }, e.node);
        } catch (const Error& err) {
            throw err.at(e.pos);
        }
    }

    Value eval_node(const IntLit& n, Ctx&) { return Value(n.value); }
    Value eval_node(const RealLit& n, Ctx&) { return Value(n.value); }
    Value eval_node(const BoolLit& n, Ctx&) { return Value(n.value); }
    Value eval_node(const StringLit& n, Ctx&) { return Value(n.value); }

    Value eval_node(const ComplexLit& n, Ctx& ctx) {
        return Value(std::complex<double>(eval(*n.re, ctx).as_real(), eval(*n.im, ctx).as_real()));
    }

    Value eval_node(const VarRef& n, Ctx& ctx) {
        if (Variable* v = find(n.name, ctx))
            return v->value;
        if (n.name == "pi")
            return Value(std::numbers::pi);
        throw Error(ErrorCode::Static, "'" + n.name + "' is not declared");
    }

    Value eval_node(const Unary& n, Ctx& ctx) {
        const Value a = eval(*n.operand, ctx);
        switch (n.op) {
            case UnaryOp::Length:
                return Value(static_cast<std::int64_t>(expect_register(a, "operand of '#'").reg.size()));
            case UnaryOp::Not:
                if (!a.is_bool())
                    throw type_error("'not' needs a boolean here, got " + a.type_name());
                return Value(!a.as_bool());
            case UnaryOp::Neg:
                if (a.is_int())
                    return Value(-a.as_int());
                if (a.is_real())
                    return Value(-a.as_real());
                if (a.is_complex())
                    return Value(-a.as_complex());
                throw type_error("'-' needs a number, got " + a.type_name());
        }
        return {};
    }

    Value eval_node(const Binary& n, Ctx& ctx) {
        const Value a = eval(*n.lhs, ctx);
        const Value b = eval(*n.rhs, ctx);
        switch (n.op) {
            case BinaryOp::And:
            case BinaryOp::Or:
            case BinaryOp::Xor: {
                if (!a.is_bool() || !b.is_bool())
                    throw type_error(std::string("'") + spelling(n.op) +
                                     "' on registers is only valid as an if condition");
                const bool x = a.as_bool(), y = b.as_bool();
                return Value(n.op == BinaryOp::And ? (x && y) : n.op == BinaryOp::Or ? (x || y) : (x != y));
            }
            case BinaryOp::Concat: {
                const auto& ra = expect_register(a, "operand of '&'");
                const auto& rb = expect_register(b, "operand of '&'");
                QuType t = ra.type == rb.type ? ra.type : QuType::Qureg;
                if (ra.type == QuType::Quconst || rb.type == QuType::Quconst)
                    t = QuType::Quconst;
                return Value(ra.reg.concat(rb.reg), t);
            }
            case BinaryOp::Eq:
            case BinaryOp::Ne:
            case BinaryOp::Lt:
            case BinaryOp::Le:
            case BinaryOp::Gt:
            case BinaryOp::Ge: return comparison(n.op, a, b);
            default: return arithmetic(n.op, a, b);
        }
    }

    Value eval_node(const Index& n, Ctx& ctx) {
        const Value base = eval(*n.base, ctx);
        const auto& r = expect_register(base, "indexed value");
        return Value(r.reg.index(expect_int(eval(*n.index, ctx), "register index")), r.type);
    }

    Value eval_node(const Slice& n, Ctx& ctx) {
        const Value base = eval(*n.base, ctx);
        const auto& r = expect_register(base, "sliced value");
        return Value(r.reg.slice(expect_int(eval(*n.first, ctx), "slice bound"),
                                 expect_int(eval(*n.last, ctx), "slice bound")),
                     r.type);
    }

    Value eval_node(const Call& n, Ctx& ctx) {
        if (n.name == "random") {
            if (!ctx.top && ctx.level != Level::Procedure)
                throw Error(ErrorCode::Static, "random() is not allowed in " + std::string(to_string(ctx.level)));
            return Value(machine.random_uniform());
        }
        if (const auto* math = find_math_builtin(n.name)) {
            if (n.args.size() != 1)
                throw Error(ErrorCode::Static, n.name + "() takes one argument");
            const Value a = eval(*n.args[0], ctx);
            if (!a.is_int() && !a.is_real())
                throw type_error(n.name + "() needs an int or real argument");
            const double r = math->fn(a.as_real());
            if (math->result == ClassicalType::Int)
                return Value(static_cast<std::int64_t>(r));
            return Value(r);
        }
        auto it = subs.find(n.name);
        if (it == subs.end() || it->second->level != Level::Function)
            throw Error(ErrorCode::Static, "'" + n.name + "' is not a function");
        std::vector<Value> args;
        for (const auto& a : n.args)
            args.push_back(eval(*a, ctx));
        return call_function(*it->second, std::move(args));
    }

    CondExpr eval_cond(const Expr& e, Ctx& ctx) {
        if (const auto* u = get<Unary>(e); u && u->op == UnaryOp::Not)
            return CondExpr::negate(eval_cond(*u->operand, ctx));
        if (const auto* b = get<Binary>(e)) {
            switch (b->op) {
                case BinaryOp::And: return CondExpr::conj(eval_cond(*b->lhs, ctx), eval_cond(*b->rhs, ctx));
                case BinaryOp::Or: return CondExpr::disj(eval_cond(*b->lhs, ctx), eval_cond(*b->rhs, ctx));
                case BinaryOp::Xor: return CondExpr::exor(eval_cond(*b->lhs, ctx), eval_cond(*b->rhs, ctx));
                default: break;
            }
        }
        const Value v = eval(e, ctx);
        if (v.is_bool())
            return CondExpr::constant(v.as_bool());
        if (v.is_register())
            return CondExpr::all_of(v.as_register().reg.qubits());
        throw type_error("condition must be boolean or quantum, got " + v.type_name()).at(e.pos);
    }

    // ----- statements -----

    Flow exec_block(const Block& block, Ctx& ctx) {
        ctx.scopes.emplace_back();
        Flow flow;
        try {
            flow = exec_statements(block, ctx);
        } catch (...) {
            abandon_scope(ctx.scopes.back());
            ctx.scopes.pop_back();
            throw;
        }
        close_scope(ctx, ctx.scopes.back());
        ctx.scopes.pop_back();
        return flow;
    }

    Flow exec_statements(const Block& block, Ctx& ctx) {
        for (const auto& s : block)
            if (exec(*s, ctx) == Flow::Return)
                return Flow::Return;
        return Flow::Normal;
    }

    Flow exec(const Stmt& s, Ctx& ctx) {
        try {
            return std::visit([&](const auto& n) { return exec_node(n, ctx); }, s.node);
        } catch (const Error& err) {
            throw err.at(s.pos);
        }
    }

    Flow exec_node(const VarDecl& n, Ctx& ctx) {
        Value v = n.init ? coerce(eval(*n.init, ctx), n.type, "'" + n.name + "'") : default_value(n.type);
        declare(ctx, n.name, Variable{std::move(v), false, n.type});
        return Flow::Normal;
    }

    Flow exec_node(const ConstDecl& n, Ctx& ctx) {
        declare(ctx, n.name, Variable{eval(*n.value, ctx), true, std::nullopt});
        return Flow::Normal;
    }

    Flow exec_node(const RegisterDecl& n, Ctx& ctx) {
        const std::int64_t size = expect_int(eval(*n.size, ctx), "register size");
        if (size < 1)
            throw Error(ErrorCode::InvalidArgument, "register size must be at least 1, got " + std::to_string(size));
        if (n.type != QuType::Qureg)
            throw Error(ErrorCode::Static, std::string(to_string(n.type)) + " is only valid as a parameter type");
        Scope& scope = current_scope(ctx);
        if (scope.vars.count(n.name))
            throw Error(ErrorCode::Static, "'" + n.name + "' is already declared");
        RegisterMap reg = pool.allocate_register(static_cast<int>(size));
        if (&scope != &globals)
            scope.owned.push_back(reg);
        scope.vars.emplace(n.name, Variable{Value(reg, QuType::Qureg), true, std::nullopt});
        return Flow::Normal;
    }

    Variable& assignable(const std::string& name, Ctx& ctx) {
        Variable* v = find(name, ctx);
        if (!v)
            throw Error(ErrorCode::Static, "'" + name + "' is not declared");
        if (v->constant || !v->type)
            throw Error(ErrorCode::Static, "cannot assign to '" + name + "'");
        return *v;
    }

    Flow exec_node(const Assign& n, Ctx& ctx) {
        Value value = eval(*n.value, ctx);
        Variable& v = assignable(n.name, ctx);
        v.value = coerce(value, *v.type, "'" + n.name + "'");
        return Flow::Normal;
    }

    Flow exec_node(const CallStmt& n, Ctx& ctx) {
        std::vector<Value> args;
        for (const auto& a : n.args)
            args.push_back(eval(*a, ctx));
        call_named(n.name, std::move(args), n.inverted, ctx);
        return Flow::Normal;
    }

    Flow exec_node(const If& n, Ctx& ctx) {
        const CondExpr cond = eval_cond(*n.cond, ctx);
        if (cond.qubits().empty())
            return branch(n, cond.evaluate(0), ctx);

        const ZhegalkinPoly poly = to_xdnf(cond);
        const bool forking =
            mutates_enclosing_state(n.then_block) || (n.else_block && mutates_enclosing_state(*n.else_block));
        if (forking) {
            if (!ctx.fork)
                throw Error(ErrorCode::Static, "a forking quantum if must be inside an operator or qufunct");
            bool taken;
            if (poly.is_zero())
                taken = false;
            else if (poly.is_one())
                taken = true;
            else
                taken = decide(cond, *ctx.fork);
            ++ctx.quantum_if_depth;
            Flow flow;
            try {
                flow = branch(n, taken, ctx);
            } catch (...) {
                --ctx.quantum_if_depth;
                throw;
            }
            --ctx.quantum_if_depth;
            return flow;
        }

        GateSink* saved = ctx.sink;
        auto run = [&](const Block& body) {
            return [&, saved](GateSink& sink) {
                ctx.sink = &sink;
                ++ctx.quantum_if_depth;
                try {
                    exec_block(body, ctx);
                } catch (...) {
                    ctx.sink = saved;
                    --ctx.quantum_if_depth;
                    throw;
                }
                ctx.sink = saved;
                --ctx.quantum_if_depth;
            };
        };
        const std::function<void(GateSink&)> then_body = run(n.then_block);
        std::function<void(GateSink&)> else_body;
        if (n.else_block)
            else_body = run(*n.else_block);
        exec_quantum_if(poly, pool, *ctx.sink, then_body, n.else_block ? &else_body : nullptr);
        return Flow::Normal;
    }

    Flow branch(const If& n, bool taken, Ctx& ctx) {
        if (taken)
            return exec_block(n.then_block, ctx);
        if (n.else_block)
            return exec_block(*n.else_block, ctx);
        return Flow::Normal;
    }

    bool decide(const CondExpr& cond, ForkState& fork) {
        if (fork.next < fork.prefix.size()) {
            const ForkDecision& d = fork.prefix[fork.next++];
            if (!(d.condition == cond))
                throw Error(ErrorCode::Runtime, "forking condition " + cond.to_string() +
                                                    " differs between paths (was " + d.condition.to_string() + ")");
            fork.made.push_back(d);
            return d.taken;
        }
        auto alternative = fork.made;
        alternative.push_back(ForkDecision{cond, false});
        fork.alternatives.push_back(std::move(alternative));
        fork.made.push_back(ForkDecision{cond, true});
        return true;
    }

    Flow exec_node(const For& n, Ctx& ctx) {
        const std::int64_t from = expect_int(eval(*n.from, ctx), "loop bound");
        const std::int64_t to = expect_int(eval(*n.to, ctx), "loop bound");
        const std::int64_t step = n.step ? expect_int(eval(*n.step, ctx), "loop step") : 1;
        if (step == 0)
            throw Error(ErrorCode::InvalidArgument, "loop step must not be 0");
        Variable& var = assignable(n.var, ctx);
        if (var.type != ClassicalType::Int)
            throw type_error("loop variable '" + n.var + "' must be an int");
        for (std::int64_t i = from; step > 0 ? i <= to : i >= to; i += step) {
            assignable(n.var, ctx).value = Value(i);
            if (exec_block(n.body, ctx) == Flow::Return)
                return Flow::Return;
        }
        return Flow::Normal;
    }

    Flow exec_node(const While& n, Ctx& ctx) {
        for (;;) {
            const Value c = eval(*n.cond, ctx);
            if (!c.is_bool())
                throw type_error("loop condition must be boolean, got " + c.type_name());
            if (!c.as_bool())
                return Flow::Normal;
            if (exec_block(n.body, ctx) == Flow::Return)
                return Flow::Return;
        }
    }

    void require_machine(Ctx& ctx, const char* what) {
        if (ctx.sink != &machine || pool.depth() > 0)
            throw Error(ErrorCode::Static, std::string(what) + " is only allowed at procedure level");
    }

    Flow exec_node(const Measure& n, Ctx& ctx) {
        require_machine(ctx, "measure");
        const Value r = eval(*n.reg, ctx);
        const std::uint64_t outcome = machine.measure_register(expect_register(r, "measured value").reg);
        if (n.into) {
            Variable& v = assignable(*n.into, ctx);
            v.value = coerce(Value(static_cast<std::int64_t>(outcome)), *v.type, "'" + *n.into + "'");
        }
        return Flow::Normal;
    }

    Flow exec_node(const Reset&, Ctx& ctx) {
        require_machine(ctx, "reset");
        machine.reset_state();
        return Flow::Normal;
    }

    Flow exec_node(const Dump&, Ctx& ctx) {
        require_machine(ctx, "dump");
        out << ": " << machine.format_dump() << "\n";
        return Flow::Normal;
    }

    Flow exec_node(const Print& n, Ctx& ctx) {
        require_machine(ctx, "print");
        std::string line;
        for (std::size_t i = 0; i < n.items.size(); ++i) {
            const Value v = eval(*n.items[i], ctx);
            if (i)
                line += ' ';
            line += v.to_display();
        }
        out << line << "\n";
        return Flow::Normal;
    }

    Flow exec_node(const Return& n, Ctx& ctx) {
        if (!ctx.sub || ctx.level != Level::Function)
            throw Error(ErrorCode::Static, "return outside of a function");
        ctx.result = coerce(eval(*n.value, ctx), *ctx.sub->return_type, "return value of '" + ctx.sub->name + "'");
        return Flow::Return;
    }

    Flow exec_node(const Exit&, Ctx& ctx) {
        require_machine(ctx, "exit");
        throw ExitSignal{};
    }

    // ----- calls -----

    void call_named(const std::string& name, std::vector<Value> args, bool invert, Ctx& ctx) {
        if (const auto* sig = find_builtin(name)) {
            call_builtin(*sig, args, invert, ctx);
            return;
        }
        auto it = subs.find(name);
        if (it == subs.end())
            throw Error(ErrorCode::Static, "subroutine '" + name + "' is not defined");
        const Subroutine& sub = *it->second;
        if (static_cast<int>(sub.level) > static_cast<int>(ctx.level))
            throw Error(ErrorCode::Hierarchy, std::string(to_string(ctx.level)) + " cannot call " +
                                                  to_string(sub.level) + " '" + name + "'");
        switch (sub.level) {
            case Level::Function: throw Error(ErrorCode::Static, "function '" + name + "' cannot be called as a statement");
            case Level::Procedure:
                if (invert)
                    throw Error(ErrorCode::Static, "procedure '" + name + "' cannot be inverted");
                call_procedure(sub, bind(sub, std::move(args)), ctx);
                return;
            default: call_quantum(sub, bind(sub, std::move(args)), invert, ctx);
        }
    }

    void call_builtin(const BuiltinSignature& sig, const std::vector<Value>& args, bool invert, Ctx& ctx) {
        if (static_cast<int>(sig.level) > static_cast<int>(ctx.level))
            throw Error(ErrorCode::Hierarchy, std::string(to_string(ctx.level)) + " cannot call " +
                                                  to_string(sig.level) + " '" + sig.name + "'");
        const std::size_t want = static_cast<std::size_t>(sig.angle_params) + sig.register_params.size();
        if (args.size() != want)
            throw Error(ErrorCode::Static, "'" + sig.name + "' expects " + std::to_string(want) + " arguments, got " +
                                               std::to_string(args.size()));
        std::vector<double> angles;
        std::vector<RegisterMap> regs;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i < static_cast<std::size_t>(sig.angle_params))
                angles.push_back(coerce(args[i], ClassicalType::Real, "'" + sig.name + "'").as_real());
            else
                regs.push_back(expect_register(args[i], "register argument").reg);
        }
        if (!invert) {
            emit_builtin(sig, angles, regs, *ctx.sink);
            return;
        }
        TapeSink tape;
        emit_builtin(sig, angles, regs, tape);
        for (const auto& op : adjoint_of_tape(tape.tape()))
            ctx.sink->emit(op);
    }

    std::vector<Value> bind(const Subroutine& sub, std::vector<Value> args) {
        if (args.size() != sub.params.size())
            throw Error(ErrorCode::Static, "'" + sub.name + "' expects " + std::to_string(sub.params.size()) +
                                               " arguments, got " + std::to_string(args.size()));
        std::vector<RegisterMap> regs;
        for (std::size_t i = 0; i < args.size(); ++i) {
            const Param& p = sub.params[i];
            if (const auto* qt = std::get_if<QuType>(&p.type)) {
                const auto& r = expect_register(args[i], ("argument '" + p.name + "'").c_str());
                for (const RegisterMap& other : regs)
                    if (other.overlaps(r.reg))
                        throw Error(ErrorCode::Overlap, "register arguments of '" + sub.name + "' overlap");
                regs.push_back(r.reg);
                args[i] = Value(regs.back(), *qt);
            } else {
                args[i] = coerce(args[i], std::get<ClassicalType>(p.type), "argument '" + p.name + "'");
            }
        }
        return args;
    }

    Ctx subroutine_ctx(const Subroutine& sub, const std::vector<Value>& args, GateSink* sink) {
        Ctx c;
        c.level = sub.level;
        c.sub = &sub;
        c.sink = sink;
        c.scopes.emplace_back();
        for (std::size_t i = 0; i < args.size(); ++i) {
            std::optional<ClassicalType> type;
            if (const auto* ct = std::get_if<ClassicalType>(&sub.params[i].type))
                type = *ct;
            c.scopes.back().vars.emplace(sub.params[i].name, Variable{args[i], false, type});
        }
        return c;
    }

    Flow run_body(const Subroutine& sub, Ctx& c) {
        Flow flow;
        try {
            flow = exec_statements(sub.body, c);
        } catch (...) {
            abandon_scope(c.scopes.back());
            throw;
        }
        close_scope(c, c.scopes.back());
        return flow;
    }

    Value call_function(const Subroutine& sub, std::vector<Value> args) {
        Ctx c = subroutine_ctx(sub, bind(sub, std::move(args)), nullptr);
        run_body(sub, c);
        if (!c.result)
            throw Error(ErrorCode::Runtime, "function '" + sub.name + "' ended without return");
        return *c.result;
    }

    void call_procedure(const Subroutine& sub, const std::vector<Value>& args, Ctx& ctx) {
        Ctx c = subroutine_ctx(sub, args, ctx.sink);
        run_body(sub, c);
    }

    GateTape record_body(const Subroutine& sub, const std::vector<Value>& args, bool conditioned) {
        std::vector<ForkPath> paths;
        std::vector<std::vector<ForkDecision>> pending{{}};
        while (!pending.empty()) {
            ForkState fork;
            fork.prefix = std::move(pending.back());
            pending.pop_back();
            TapeSink tape;
            Ctx c = subroutine_ctx(sub, args, &tape);
            c.conditioned = conditioned;
            c.fork = &fork;
            run_body(sub, c);
            if (fork.next < fork.prefix.size())
                throw Error(ErrorCode::Runtime, "forked path of '" + sub.name + "' diverged on replay");
            paths.push_back(ForkPath{std::move(fork.made), tape.take()});
            if (paths.size() + pending.size() + fork.alternatives.size() > Interpreter::kMaxForkPaths)
                throw Error(ErrorCode::Runtime, "'" + sub.name + "' forks into more than " +
                                                    std::to_string(Interpreter::kMaxForkPaths) + " paths");
            for (auto& alt : fork.alternatives)
                pending.push_back(std::move(alt));
        }
        if (paths.size() == 1 && paths.front().decisions.empty())
            return std::move(paths.front().tape);
        self.last_fork_paths_ = paths;
        return serialize_fork_paths(paths, pool);
    }

    GateTape record_with_scratch(const Subroutine& sub, const std::vector<Value>& args, bool conditioned) {
        std::vector<Value> inner = args;
        std::vector<RegisterMap> targets, aux;
        std::vector<Qubit> scratch_qubits;
        for (std::size_t i = 0; i < args.size(); ++i) {
            const auto* qt = std::get_if<QuType>(&sub.params[i].type);
            if (!qt)
                continue;
            const RegisterMap& reg = args[i].as_register().reg;
            if (*qt == QuType::Quvoid) {
                RegisterMap t = pool.allocate_register(static_cast<int>(reg.size()));
                targets.push_back(reg);
                aux.push_back(t);
                inner[i] = Value(t, QuType::Quvoid);
                scratch_qubits.insert(scratch_qubits.end(), t.begin(), t.end());
            } else if (*qt == QuType::Quscratch) {
                scratch_qubits.insert(scratch_qubits.end(), reg.begin(), reg.end());
            }
        }
        const GateTape forward = record_body(sub, inner, conditioned);
        GateTape out;
        out.push(EmptinessCheck{scratch_qubits, "scratch register of '" + sub.name + "' not empty on entry"});
        out.append(forward);
        TapeSink copy;
        for (std::size_t k = 0; k < targets.size(); ++k)
            emit_fanout(copy, aux[k], targets[k]);
        out.append(copy.tape());
        out.append(adjoint_of_tape(forward));
        out.push(EmptinessCheck{scratch_qubits, "scratch register of '" + sub.name + "' not restored"});
        for (auto it = aux.rbegin(); it != aux.rend(); ++it)
            pool.release_register(*it);
        return out;
    }

    void call_quantum(const Subroutine& sub, const std::vector<Value>& args, bool invert, Ctx& ctx) {
        const bool conditioned = ctx.under_condition();
        if (conditioned && !sub.is_cond)
            throw Error(ErrorCode::Static, std::string(to_string(sub.level)) + " '" + sub.name +
                                               "' must be declared cond to run conditionally");
        Recording recording(pool);
        GateTape tape = sub.has_quscratch() ? record_with_scratch(sub, args, conditioned)
                                            : record_body(sub, args, conditioned);
        if (invert)
            tape = adjoint_of_tape(tape);
        else
            for (std::size_t i = 0; i < args.size(); ++i)
                if (const auto* qt = std::get_if<QuType>(&sub.params[i].type); qt && *qt == QuType::Quvoid)
                    ctx.sink->emit(EmptinessCheck{args[i].as_register().reg.qubits(),
                                                  "quvoid argument '" + sub.params[i].name + "' of '" + sub.name +
                                                      "' not empty"});
        for (const auto& op : tape)
            ctx.sink->emit(op);
    }

    Ctx top_ctx(GateSink* sink) {
        Ctx c;
        c.top = true;
        c.sink = sink;
        return c;
    }
};

Interpreter::Interpreter(MachineState& machine, std::ostream& out)
    : impl_(std::make_unique<Impl>(*this, machine, out)), machine_(machine) {}

Interpreter::~Interpreter() = default;

void Interpreter::run_program(const Program& program) {
    if (exited_)
        return;
    const auto diags = checker_.check(program, true);
    if (!diags.empty()) {
        std::string message = "[" + diags.front().rule + "] " + diags.front().message;
        for (std::size_t i = 1; i < diags.size(); ++i)
            message += "\n" + diags[i].to_string();
        throw Error(ErrorCode::Static, message, diags.front().pos);
    }
    for (const auto& sub : program.subroutines())
        impl_->subs[sub->name] = sub;
    const auto statements = program.statements();
    for (std::size_t i = 0; i < statements.size(); ++i) {
        const Stmt& stmt = *statements[i];
        Ctx ctx = impl_->top_ctx(&machine_);
        try {
            impl_->exec(stmt, ctx);
        } catch (const ExitSignal&) {
            exited_ = true;
            return;
        } catch (...) {
            for (std::size_t j = i; j < statements.size(); ++j)
                if (auto name = declared_name(*statements[j]); name && !impl_->globals.vars.count(*name))
                    checker_.forget_global(*name);
            throw;
        }
        if (hook_)
            hook_(stmt);
    }
}

void Interpreter::run_source(const std::string& source) {
    run_program(parse_program(source));
}

void Interpreter::call(const std::string& name, const std::vector<Value>& args, bool invert) {
    Ctx ctx = impl_->top_ctx(&machine_);
    impl_->call_named(name, args, invert, ctx);
}

GateTape Interpreter::record_call(const std::string& name, const std::vector<Value>& args, bool invert) {
    TapeSink tape;
    Ctx ctx = impl_->top_ctx(&tape);
    {
        Recording recording(impl_->pool);
        impl_->call_named(name, args, invert, ctx);
    }
    return tape.take();
}

const Value* Interpreter::global(const std::string& name) const {
    auto it = impl_->globals.vars.find(name);
    return it == impl_->globals.vars.end() ? nullptr : &it->second.value;
}

}  // namespace qclite
