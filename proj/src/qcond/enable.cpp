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

#include "qclite/qcond/enable.hpp"

#include <algorithm>

#include "qclite/error.hpp"

namespace qclite {

std::vector<Qubit> EnablePlan::enable_qubits() const {
    if (kind == Kind::Direct)
        return controls;
    if (kind == Kind::Synthesized)
        return scratch->qubits();
    return {};
}

EnablePlan synthesize_enable(const ZhegalkinPoly& poly, QubitAllocator& pool, bool force_scratch) {
    EnablePlan plan;
    if (poly.is_zero()) {
        plan.kind = EnablePlan::Kind::Never;
        return plan;
    }
    if (poly.is_one()) {
        plan.kind = EnablePlan::Kind::Always;
        return plan;
    }
    const auto monomials = poly.monomials();
    if (!poly.constant() && monomials.size() == 1 && !force_scratch) {
        plan.kind = EnablePlan::Kind::Direct;
        plan.controls = monomials.front();
        return plan;
    }

    plan.kind = EnablePlan::Kind::Synthesized;
    plan.scratch = pool.allocate_register(1);
    const Qubit e = (*plan.scratch)[0];
    if (poly.constant())
        plan.compute.push(PrimitiveGate::x(e));
    for (const auto& m : monomials)
        plan.compute.push(PrimitiveGate::x(e, m));
    // Every compute gate is a self-adjoint X, so the inverse is the reversal.
    std::vector<TapeOp> reversed(plan.compute.ops().rbegin(), plan.compute.ops().rend());
    plan.uncompute = GateTape(std::move(reversed));
    return plan;
}

static void require_not_targeted(const PrimitiveGate& gate, const std::vector<Qubit>& enable) {
    if (gate.target && std::find(enable.begin(), enable.end(), *gate.target) != enable.end())
        throw Error(ErrorCode::Overlap, "conditional operation targets condition qubit " +
                                            std::to_string(*gate.target));
}

GateTape conditionalize_tape(const GateTape& tape, const std::vector<Qubit>& enable) {
    GateTape out;
    for (const auto& op : tape) {
        if (const auto* gate = std::get_if<PrimitiveGate>(&op)) {
            require_not_targeted(*gate, enable);
            PrimitiveGate g = *gate;
            g.add_controls(enable);
            out.push(std::move(g));
        } else {
            out.push(op);
        }
    }
    return out;
}

ConditionalSink::ConditionalSink(GateSink& parent, std::vector<Qubit> enable)
    : parent_(parent), enable_(std::move(enable)) {}

void ConditionalSink::emit(const TapeOp& op) {
    if (const auto* gate = std::get_if<PrimitiveGate>(&op)) {
        require_not_targeted(*gate, enable_);
        PrimitiveGate g = *gate;
        g.add_controls(enable_);
        parent_.emit(TapeOp{std::move(g)});
        return;
    }
    parent_.emit(op);
}

static void emit_all(GateSink& sink, const GateTape& tape) {
    for (const auto& op : tape)
        sink.emit(op);
}

void exec_quantum_if(const ZhegalkinPoly& cond, QubitAllocator& pool, GateSink& sink,
                     const std::function<void(GateSink&)>& then_body,
                     const std::function<void(GateSink&)>* else_body) {
    // Inverting a multi-qubit conjunction in place is not possible with a
    // single X, so an else branch needs a synthesized enable qubit.
    const auto monomials = cond.monomials();
    const bool force = else_body && monomials.size() == 1 && monomials.front().size() > 1;
    EnablePlan plan = synthesize_enable(cond, pool, force);

    switch (plan.kind) {
        case EnablePlan::Kind::Never:
            if (else_body)
                (*else_body)(sink);
            return;
        case EnablePlan::Kind::Always:
            then_body(sink);
            return;
        case EnablePlan::Kind::Direct:
        case EnablePlan::Kind::Synthesized:
            break;
    }

    emit_all(sink, plan.compute);
    const auto enable = plan.enable_qubits();
    ConditionalSink conditioned(sink, enable);
    then_body(conditioned);
    if (else_body) {
        sink.emit_gate(PrimitiveGate::x(enable.front()));
        (*else_body)(conditioned);
        sink.emit_gate(PrimitiveGate::x(enable.front()));
    }
    emit_all(sink, plan.uncompute);
    if (plan.scratch) {
        sink.emit(EmptinessCheck{plan.scratch->qubits(), "condition scratch qubit not restored"});
        pool.release_register(*plan.scratch);
    }
}

CondExpr ForkPath::condition() const {
    CondExpr acc = CondExpr::constant(true);
    bool first = true;
    for (const auto& d : decisions) {
        CondExpr term = d.taken ? d.condition : CondExpr::negate(d.condition);
        acc = first ? std::move(term) : CondExpr::conj(std::move(acc), std::move(term));
        first = false;
    }
    return acc;
}

GateTape serialize_fork_paths(const std::vector<ForkPath>& paths, QubitAllocator& pool) {
    GateTape out;
    for (const auto& path : paths) {
        const CondExpr cond = path.condition();
        const auto read = cond.qubits();
        for (const auto& op : path.tape) {
            const auto* gate = std::get_if<PrimitiveGate>(&op);
            if (gate && gate->target && read.count(*gate->target))
                throw Error(ErrorCode::Overlap, "forked path modifies qubit " + std::to_string(*gate->target) +
                                                    " used in its branch condition");
        }
        EnablePlan plan = synthesize_enable(to_xdnf(cond), pool);
        switch (plan.kind) {
            case EnablePlan::Kind::Never:
                continue;
            case EnablePlan::Kind::Always:
                out.append(path.tape);
                continue;
            case EnablePlan::Kind::Direct:
            case EnablePlan::Kind::Synthesized:
                break;
        }
        out.append(plan.compute);
        out.append(conditionalize_tape(path.tape, plan.enable_qubits()));
        out.append(plan.uncompute);
        if (plan.scratch) {
            out.push(EmptinessCheck{plan.scratch->qubits(), "fork condition scratch qubit not restored"});
            pool.release_register(*plan.scratch);
        }
    }
    return out;
}

}  // namespace qclite
