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

#include "qclite/machine/gate.hpp"

#include <algorithm>
#include <sstream>

namespace qclite {

static std::vector<Qubit> normalized(std::vector<Qubit> qubits) {
    std::sort(qubits.begin(), qubits.end());
    qubits.erase(std::unique(qubits.begin(), qubits.end()), qubits.end());
    return qubits;
}

PrimitiveGate PrimitiveGate::x(Qubit target, std::vector<Qubit> controls) {
    return {GateKind::X, 0.0, target, normalized(std::move(controls))};
}

PrimitiveGate PrimitiveGate::h(Qubit target, std::vector<Qubit> controls) {
    return {GateKind::H, 0.0, target, normalized(std::move(controls))};
}

PrimitiveGate PrimitiveGate::rot(double theta, Qubit target, std::vector<Qubit> controls) {
    return {GateKind::Rot, theta, target, normalized(std::move(controls))};
}

PrimitiveGate PrimitiveGate::phase(double phi, std::vector<Qubit> controls) {
    return {GateKind::Phase, phi, std::nullopt, normalized(std::move(controls))};
}

void PrimitiveGate::add_controls(const std::vector<Qubit>& extra) {
    controls.insert(controls.end(), extra.begin(), extra.end());
    controls = normalized(std::move(controls));
}

PrimitiveGate adjoint(const PrimitiveGate& gate) {
    PrimitiveGate out = gate;
    if (gate.kind == GateKind::Rot || gate.kind == GateKind::Phase)
        out.angle = -gate.angle;
    return out;
}

std::string describe(const PrimitiveGate& gate) {
    std::ostringstream os;
    switch (gate.kind) {
        case GateKind::X: os << "X"; break;
        case GateKind::H: os << "H"; break;
        case GateKind::Rot: os << "ROT(" << gate.angle << ")"; break;
        case GateKind::Phase: os << "PHASE(" << gate.angle << ")"; break;
    }
    if (gate.target)
        os << " " << *gate.target;
    if (!gate.controls.empty()) {
        os << " ctl{";
        for (std::size_t i = 0; i < gate.controls.size(); ++i)
            os << (i ? "," : "") << gate.controls[i];
        os << "}";
    }
    return os.str();
}

void GateTape::append(const GateTape& other) {
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
}

std::size_t GateTape::gate_count() const {
    return static_cast<std::size_t>(std::count_if(ops_.begin(), ops_.end(), [](const TapeOp& op) {
        return std::holds_alternative<PrimitiveGate>(op);
    }));
}

}  // namespace qclite
