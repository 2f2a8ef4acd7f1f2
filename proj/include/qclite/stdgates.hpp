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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qclite/machine/gate.hpp"
#include "qclite/machine/register_map.hpp"
#include "qclite/types.hpp"

namespace qclite {

struct BuiltinSignature {
    std::string name;
    int angle_params = 0;  // leading real parameters
    std::vector<QuType> register_params;
    Level level = Level::Operator;
};

/// Looks up a builtin quantum routine by its source name; null if unknown.
const BuiltinSignature* find_builtin(std::string_view name);
const std::vector<BuiltinSignature>& builtins();

// Builtins lowered to primitive gates. Broadcasting ones act on every qubit
// of the register, position 0 first.
void emit_h(GateSink& sink, const RegisterMap& q);
void emit_not(GateSink& sink, const RegisterMap& q);
void emit_cnot(GateSink& sink, const RegisterMap& target, const RegisterMap& control);
void emit_rot(GateSink& sink, double theta, const RegisterMap& q);
void emit_phase(GateSink& sink, double phi);
void emit_flip(GateSink& sink, const RegisterMap& q);
void emit_fanout(GateSink& sink, const RegisterMap& source, const RegisterMap& target);

/// Dispatches to the emitter for `sig`; argument counts must match.
void emit_builtin(const BuiltinSignature& sig, std::span<const double> angles, std::span<const RegisterMap> regs,
                  GateSink& sink);

}  // namespace qclite
