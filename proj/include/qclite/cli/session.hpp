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

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

#include "qclite/interp/interpreter.hpp"
#include "qclite/machine/machine_state.hpp"

namespace qclite {

struct SessionConfig {
    int total_qubits = 32;
    std::uint64_t seed = 0;
    bool echo = true;
    bool checks = true;
    int active_limit = MachineState::kDefaultActiveLimit;
};

/// "[a/T] terms" with kets over the allocated qubits only.
std::string echo_state(const MachineState& machine);

/// A machine plus an interpreter, with per-statement state echo.
class Session {
public:
    Session(const SessionConfig& config, std::ostream& out);

    MachineState& machine() { return machine_; }
    Interpreter& interpreter() { return interp_; }

    void set_echo(bool on) { echo_ = on; }
    bool echo() const { return echo_; }

    /// Runs one REPL input. Errors are reported as "! message" on the
    /// session output; returns false in that case.
    bool run_interactive(const std::string& text);

    /// Parses, checks and runs a whole script. Throws Error on failure.
    void run_script_source(const std::string& source);

    bool exited() const { return interp_.exited(); }

private:
    std::ostream& out_;
    MachineState machine_;
    Interpreter interp_;
    bool echo_;
    std::uint64_t last_mutation_ = 0;
};

/// Reads inputs until end of stream or exit. With `echo_input` each prompt
/// is followed by the line read, which makes piped sessions read like
/// terminal transcripts. Returns the process exit status.
int repl_loop(Session& session, std::istream& in, std::ostream& out, bool echo_input);

/// Runs the script at `path`. Diagnostics go to `err`. Returns the process
/// exit status.
int run_script(Session& session, const std::string& path, std::ostream& err);

}  // namespace qclite
