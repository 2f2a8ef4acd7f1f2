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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qclite/error.hpp"
#include "qclite/syntax/ast.hpp"
#include "qclite/types.hpp"

namespace qclite {

/// Rule identifiers reported in diagnostics.
namespace rule {
inline constexpr const char* kHierarchy = "hierarchy";
inline constexpr const char* kGlobals = "globals";
inline constexpr const char* kRandom = "random";
inline constexpr const char* kMeasureReset = "measure-reset";
inline constexpr const char* kQufunctGates = "qufunct-gates";
inline constexpr const char* kQuconstTarget = "quconst-target";
inline constexpr const char* kQuvoidPosition = "quvoid-position";
inline constexpr const char* kCondRequired = "cond-required";
inline constexpr const char* kForkPlacement = "fork-placement";
inline constexpr const char* kQuantumIfBody = "quantum-if-body";
inline constexpr const char* kLoopGuard = "loop-guard";
inline constexpr const char* kSideEffect = "side-effect";
inline constexpr const char* kUndeclared = "undeclared";
inline constexpr const char* kRedeclared = "redeclared";
inline constexpr const char* kType = "type";
inline constexpr const char* kArity = "arity";
inline constexpr const char* kReturn = "return";
inline constexpr const char* kConstAssign = "const-assign";
}  // namespace rule

struct Diagnostic {
    std::string rule;
    std::string message;
    SourcePos pos;

    std::string to_string() const;
};

/// What the checker knows about a name visible at top level.
struct GlobalSymbol {
    enum class Kind { Variable, Constant, Register };
    Kind kind = Kind::Variable;
    std::optional<ClassicalType> type;
};

struct SubroutineInfo {
    Level level = Level::Procedure;
    bool is_cond = false;
    bool builtin = false;
    std::vector<std::variant<ClassicalType, QuType>> params;
    std::optional<ClassicalType> return_type;
};

/// Compile-time rules for qclite programs. Keeps the top-level environment
/// between calls so REPL lines can refer to earlier declarations.
class StaticChecker {
public:
    StaticChecker();

    /// All violations in `program`, in source order. When there are none and
    /// `commit` is set, the program's top-level declarations become visible
    /// to later checks.
    std::vector<Diagnostic> check(const ast::Program& program, bool commit = true);

    const std::map<std::string, SubroutineInfo>& subroutines() const { return subs_; }

    /// Drops a committed global, for declarations whose execution failed.
    void forget_global(const std::string& name) { globals_.erase(name); }

private:
    friend class CheckWalker;

    std::map<std::string, GlobalSymbol> globals_;
    std::map<std::string, SubroutineInfo> subs_;
};

/// One-shot check with an empty environment.
std::vector<Diagnostic> check_static_semantics(const ast::Program& program);

/// True if the block assigns to a variable declared outside of it. Such a
/// block turns a quantum if into a forking if.
bool mutates_enclosing_state(const ast::Block& block);

}  // namespace qclite
