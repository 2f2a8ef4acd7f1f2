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

#include <memory>
#include <random>
#include <string>

#include "qclite/qcond/cond_expr.hpp"

namespace testing {

/// Random boolean expression over qubits q[0..n-1] and classical constants.
/// Carries its own evaluator so expectations never go through the library.
struct RandomCond {
    enum class Kind { Const, Var, Not, And, Or, Xor };
    Kind kind = Kind::Const;
    bool constant = false;
    int var = 0;
    std::unique_ptr<RandomCond> a, b;

    static std::unique_ptr<RandomCond> generate(std::mt19937& rng, int qubits, int depth) {
        auto n = std::make_unique<RandomCond>();
        std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
        int k = pick(rng);
        if (k == 0 && depth > 0 && rng() % 3 != 0)
            k = 1;
        n->kind = static_cast<Kind>(k);
        switch (n->kind) {
            case Kind::Const: n->constant = rng() & 1u; break;
            case Kind::Var: n->var = static_cast<int>(rng() % static_cast<unsigned>(qubits)); break;
            case Kind::Not: n->a = generate(rng, qubits, depth - 1); break;
            default:
                n->a = generate(rng, qubits, depth - 1);
                n->b = generate(rng, qubits, depth - 1);
        }
        return n;
    }

    bool eval(std::uint64_t bits) const {
        switch (kind) {
            case Kind::Const: return constant;
            case Kind::Var: return (bits >> var) & 1u;
            case Kind::Not: return !a->eval(bits);
            case Kind::And: return a->eval(bits) && b->eval(bits);
            case Kind::Or: return a->eval(bits) || b->eval(bits);
            case Kind::Xor: return a->eval(bits) != b->eval(bits);
        }
        return false;
    }

    /// Condition over machine qubits, with q[i] mapped to qubits[i].
    qclite::CondExpr to_cond(const std::vector<int>& qubits) const {
        using qclite::CondExpr;
        switch (kind) {
            case Kind::Const: return CondExpr::constant(constant);
            case Kind::Var: return CondExpr::qubit(qubits[static_cast<std::size_t>(var)]);
            case Kind::Not: return CondExpr::negate(a->to_cond(qubits));
            case Kind::And: return CondExpr::conj(a->to_cond(qubits), b->to_cond(qubits));
            case Kind::Or: return CondExpr::disj(a->to_cond(qubits), b->to_cond(qubits));
            case Kind::Xor: return CondExpr::exor(a->to_cond(qubits), b->to_cond(qubits));
        }
        return CondExpr::constant(false);
    }

    /// Source text using register `reg`.
    std::string source(const std::string& reg) const {
        switch (kind) {
            case Kind::Const: return constant ? "true" : "false";
            case Kind::Var: return reg + "[" + std::to_string(var) + "]";
            case Kind::Not: return "not (" + a->source(reg) + ")";
            case Kind::And: return "(" + a->source(reg) + " and " + b->source(reg) + ")";
            case Kind::Or: return "(" + a->source(reg) + " or " + b->source(reg) + ")";
            case Kind::Xor: return "(" + a->source(reg) + " xor " + b->source(reg) + ")";
        }
        return "";
    }
};

}  // namespace testing
