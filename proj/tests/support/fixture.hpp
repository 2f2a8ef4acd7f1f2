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

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qclite/interp/interpreter.hpp"
#include "qclite/machine/machine_state.hpp"

namespace testing {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline std::string corpus_path(const std::string& name) {
    return std::string(QCLITE_CORPUS_DIR) + "/" + name;
}

inline std::string golden_path(const std::string& name) {
    return std::string(QCLITE_GOLDEN_DIR) + "/" + name;
}

/// A machine with the corpus library loaded.
struct Lab {
    qclite::MachineState machine;
    std::ostringstream out;
    qclite::Interpreter interp;

    explicit Lab(int qubits = 16, std::uint64_t seed = 0) : machine(qubits, seed), interp(machine, out) {
        interp.run_source(read_file(corpus_path("library.qcl")));
    }

    qclite::RegisterMap alloc(int n) { return machine.allocate_register(n); }

    qclite::GateTape tape(const std::string& name, const std::vector<qclite::Value>& args, bool invert = false) {
        return interp.record_call(name, args, invert);
    }
};

/// Machine basis index with `value` written into `reg`.
inline std::uint64_t place(const qclite::RegisterMap& reg, std::uint64_t value) {
    std::uint64_t b = 0;
    for (std::size_t k = 0; k < reg.size(); ++k)
        if ((value >> k) & 1u)
            b |= std::uint64_t{1} << reg[k];
    return b;
}

}  // namespace testing
