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

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qclite {

using Qubit = int;

enum class GateKind { X, H, Rot, Phase };

/// A single-target gate (or a zero-target phase) acting only on basis states
/// whose control bits are all set. Controls are kept sorted and unique.
struct PrimitiveGate {
    GateKind kind = GateKind::X;
    double angle = 0.0;           // Rot: theta, Phase: phi, radians
    std::optional<Qubit> target;  // absent only for Phase
    std::vector<Qubit> controls;

    static PrimitiveGate x(Qubit target, std::vector<Qubit> controls = {});
    static PrimitiveGate h(Qubit target, std::vector<Qubit> controls = {});
    static PrimitiveGate rot(double theta, Qubit target, std::vector<Qubit> controls = {});
    static PrimitiveGate phase(double phi, std::vector<Qubit> controls = {});

    /// Adds qubits to the control set, keeping it sorted and unique.
    void add_controls(const std::vector<Qubit>& extra);

    friend bool operator==(const PrimitiveGate&, const PrimitiveGate&) = default;
};

PrimitiveGate adjoint(const PrimitiveGate& gate);

std::string describe(const PrimitiveGate& gate);

/// Deferred emptiness assertion recorded alongside gates. Used when the gates
/// around it are not applied immediately (recorded calls, inverted calls).
struct EmptinessCheck {
    std::vector<Qubit> qubits;
    std::string what;

    friend bool operator==(const EmptinessCheck&, const EmptinessCheck&) = default;
};

using TapeOp = std::variant<PrimitiveGate, EmptinessCheck>;

/// Flattened sequence of primitive gate applications.
class GateTape {
public:
    GateTape() = default;
    explicit GateTape(std::vector<TapeOp> ops) : ops_(std::move(ops)) {}

    void push(TapeOp op) { ops_.push_back(std::move(op)); }
    void append(const GateTape& other);

    const std::vector<TapeOp>& ops() const { return ops_; }
    std::size_t size() const { return ops_.size(); }
    bool empty() const { return ops_.empty(); }

    /// Number of gate entries, ignoring emptiness checks.
    std::size_t gate_count() const;

    auto begin() const { return ops_.begin(); }
    auto end() const { return ops_.end(); }

    friend bool operator==(const GateTape&, const GateTape&) = default;

private:
    std::vector<TapeOp> ops_;
};

/// Receives primitive operations as they are produced. Implemented by the
/// machine (apply now), by tapes (record), and by transforming wrappers.
class GateSink {
public:
    virtual ~GateSink() = default;
    virtual void emit(const TapeOp& op) = 0;

    void emit_gate(const PrimitiveGate& gate) { emit(TapeOp{gate}); }
};

class TapeSink final : public GateSink {
public:
    void emit(const TapeOp& op) override { tape_.push(op); }

    GateTape& tape() { return tape_; }
    GateTape take() { return std::move(tape_); }

private:
    GateTape tape_;
};

}  // namespace qclite
