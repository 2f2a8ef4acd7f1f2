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

#include <functional>
#include <optional>
#include <vector>

#include "qclite/machine/gate.hpp"
#include "qclite/machine/register_map.hpp"
#include "qclite/qcond/cond_expr.hpp"
#include "qclite/qcond/zhegalkin.hpp"

namespace qclite {

/// How a quantum condition is turned into enable qubits.
struct EnablePlan {
    enum class Kind {
        Never,        // constant 0: body skipped
        Always,       // constant 1: body runs unconditioned
        Direct,       // single monomial: its qubits are the enable register
        Synthesized,  // one scratch qubit computed by a CNot sequence
    };

    Kind kind = Kind::Never;
    std::vector<Qubit> controls;          // Direct
    std::optional<RegisterMap> scratch;   // Synthesized
    GateTape compute;
    GateTape uncompute;

    /// The qubits whose all-ones subspace enables the body.
    std::vector<Qubit> enable_qubits() const;
};

/// Builds the enable plan for `poly`, allocating a scratch qubit from
/// `pool` when the condition is not a single monomial (or when
/// `force_scratch` is set and the condition is not constant).
EnablePlan synthesize_enable(const ZhegalkinPoly& poly, QubitAllocator& pool, bool force_scratch = false);

/// Adds `enable` to every gate's control set. A phase gains it as its
/// control set. Throws Overlap if a gate targets an enable qubit.
GateTape conditionalize_tape(const GateTape& tape, const std::vector<Qubit>& enable);

/// Adds `enable` to the controls of every gate passing through to `parent`.
class ConditionalSink final : public GateSink {
public:
    ConditionalSink(GateSink& parent, std::vector<Qubit> enable);

    void emit(const TapeOp& op) override;
    const std::vector<Qubit>& enable() const { return enable_; }

private:
    GateSink& parent_;
    std::vector<Qubit> enable_;
};

/// Executes `if cond { then } [else { otherwise }]` on quantum data. The
/// bodies receive the sink their gates must go to. Scratch is uncomputed and
/// released before returning.
void exec_quantum_if(const ZhegalkinPoly& cond, QubitAllocator& pool, GateSink& sink,
                     const std::function<void(GateSink&)>& then_body,
                     const std::function<void(GateSink&)>* else_body);

/// One branch decision made while following a forking if.
struct ForkDecision {
    CondExpr condition;
    bool taken = true;
};

/// A classical path through a subroutine body. Its local frame is rebuilt by
/// replaying the body with the same decisions, so only the decisions and the
/// gates it produced are stored.
struct ForkPath {
    std::vector<ForkDecision> decisions;
    GateTape tape;

    /// Conjunction of every decision's condition with its polarity.
    CondExpr condition() const;
};

/// Concatenates the tapes of all paths, each conditioned on its path
/// condition, in the given order. Throws if a path's gates target one of the
/// qubits its condition reads.
GateTape serialize_fork_paths(const std::vector<ForkPath>& paths, QubitAllocator& pool);

}  // namespace qclite
