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
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "qclite/interp/static_check.hpp"
#include "qclite/interp/value.hpp"
#include "qclite/machine/gate.hpp"
#include "qclite/machine/machine_state.hpp"
#include "qclite/qcond/enable.hpp"
#include "qclite/syntax/ast.hpp"

namespace qclite {

/// Reverses the tape and replaces each gate by its adjoint.
GateTape adjoint_of_tape(const GateTape& tape);

/// Allocator used while gates are being recorded. Releases requested during
/// recording are held back until the outermost recording has been applied,
/// so recorded gates never refer to qubits that were handed out again.
class DeferredPool final : public QubitAllocator {
public:
    explicit DeferredPool(MachineState& machine) : machine_(machine) {}

    RegisterMap allocate_register(int count) override;
    void release_register(const RegisterMap& reg) override;

    int depth() const { return depth_; }
    void enter() { ++depth_; }
    /// Leaves one recording level and frees held registers at level 0.
    void leave();

private:
    MachineState& machine_;
    int depth_ = 0;
    std::vector<RegisterMap> pending_;
};

class Interpreter {
public:
    Interpreter(MachineState& machine, std::ostream& out);
    ~Interpreter();

    Interpreter(const Interpreter&) = delete;
    Interpreter& operator=(const Interpreter&) = delete;

    /// Checks and runs a program. Subroutine definitions stay available to
    /// later calls; top-level declarations become globals. Static violations
    /// throw Error(Static) listing every diagnostic.
    void run_program(const ast::Program& program);
    void run_source(const std::string& source);

    /// Called after every top-level statement.
    void set_statement_hook(std::function<void(const ast::Stmt&)> hook) { hook_ = std::move(hook); }

    /// Calls a defined subroutine or builtin from the host, as a top-level
    /// statement would.
    void call(const std::string& name, const std::vector<Value>& args, bool invert = false);

    /// Gate tape a call would apply, without applying it. Qubits the call
    /// allocates for scratch are released again on return.
    GateTape record_call(const std::string& name, const std::vector<Value>& args, bool invert = false);

    /// Paths produced by the most recent forking subroutine body.
    const std::vector<ForkPath>& last_fork_paths() const { return last_fork_paths_; }

    bool exited() const { return exited_; }

    /// Global symbol value, or nullptr.
    const Value* global(const std::string& name) const;

    StaticChecker& checker() { return checker_; }
    MachineState& machine() { return machine_; }

    static constexpr std::size_t kMaxForkPaths = std::size_t{1} << 16;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    MachineState& machine_;
    StaticChecker checker_;
    std::function<void(const ast::Stmt&)> hook_;
    std::vector<ForkPath> last_fork_paths_;
    bool exited_ = false;

    friend struct Impl;
};

}  // namespace qclite
