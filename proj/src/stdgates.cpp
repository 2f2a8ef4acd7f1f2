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

#include "qclite/stdgates.hpp"

#include "qclite/error.hpp"

namespace qclite {

const std::vector<BuiltinSignature>& builtins() {
    static const std::vector<BuiltinSignature> table = {
        {"H", 0, {QuType::Qureg}, Level::Operator},
        {"Rot", 1, {QuType::Qureg}, Level::Operator},
        {"Phase", 1, {}, Level::Operator},
        {"Not", 0, {QuType::Qureg}, Level::Qufunct},
        {"CNot", 0, {QuType::Qureg, QuType::Quconst}, Level::Qufunct},
        {"flip", 0, {QuType::Qureg}, Level::Qufunct},
        {"fanout", 0, {QuType::Quconst, QuType::Quvoid}, Level::Qufunct},
    };
    return table;
}

const BuiltinSignature* find_builtin(std::string_view name) {
    for (const auto& sig : builtins())
        if (sig.name == name)
            return &sig;
    return nullptr;
}

void emit_h(GateSink& sink, const RegisterMap& q) {
    for (Qubit t : q)
        sink.emit_gate(PrimitiveGate::h(t));
}

void emit_not(GateSink& sink, const RegisterMap& q) {
    for (Qubit t : q)
        sink.emit_gate(PrimitiveGate::x(t));
}

void emit_cnot(GateSink& sink, const RegisterMap& target, const RegisterMap& control) {
    if (target.overlaps(control))
        throw Error(ErrorCode::Overlap, "CNot target " + target.to_string() + " overlaps control " +
                                            control.to_string());
    for (Qubit t : target)
        sink.emit_gate(PrimitiveGate::x(t, control.qubits()));
}

void emit_rot(GateSink& sink, double theta, const RegisterMap& q) {
    for (Qubit t : q)
        sink.emit_gate(PrimitiveGate::rot(theta, t));
}

void emit_phase(GateSink& sink, double phi) {
    sink.emit_gate(PrimitiveGate::phase(phi));
}

void emit_flip(GateSink& sink, const RegisterMap& q) {
    const std::size_t m = q.size();
    for (std::size_t i = 0; i < m / 2; ++i) {
        const Qubit a = q[i], b = q[m - 1 - i];
        sink.emit_gate(PrimitiveGate::x(a, {b}));
        sink.emit_gate(PrimitiveGate::x(b, {a}));
        sink.emit_gate(PrimitiveGate::x(a, {b}));
    }
}

void emit_fanout(GateSink& sink, const RegisterMap& source, const RegisterMap& target) {
    if (source.size() != target.size())
        throw Error(ErrorCode::InvalidArgument, "fanout needs registers of equal length, got " +
                                                    std::to_string(source.size()) + " and " +
                                                    std::to_string(target.size()));
    if (source.overlaps(target))
        throw Error(ErrorCode::Overlap, "fanout source and target share qubits");
    for (std::size_t k = 0; k < source.size(); ++k)
        sink.emit_gate(PrimitiveGate::x(target[k], {source[k]}));
}

void emit_builtin(const BuiltinSignature& sig, std::span<const double> angles, std::span<const RegisterMap> regs,
                  GateSink& sink) {
    if (angles.size() != static_cast<std::size_t>(sig.angle_params) || regs.size() != sig.register_params.size())
        throw Error(ErrorCode::InvalidArgument, "wrong number of arguments for " + sig.name);
    const std::string& n = sig.name;
    if (n == "H")
        emit_h(sink, regs[0]);
    else if (n == "Rot")
        emit_rot(sink, angles[0], regs[0]);
    else if (n == "Phase")
        emit_phase(sink, angles[0]);
    else if (n == "Not")
        emit_not(sink, regs[0]);
    else if (n == "CNot")
        emit_cnot(sink, regs[0], regs[1]);
    else if (n == "flip")
        emit_flip(sink, regs[0]);
    else if (n == "fanout")
        emit_fanout(sink, regs[0], regs[1]);
    else
        throw Error(ErrorCode::InvalidArgument, "unknown builtin " + n);
}

}  // namespace qclite
