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

#include <string>
#include <string_view>
#include <vector>

#include "qclite/syntax/ast.hpp"
#include "qclite/syntax/token.hpp"

namespace qclite {

/// Recursive-descent parser. Stops at the first error (Syntax, with the
/// position and the expected token).
///
/// Precedence, tightest first: unary not/-/#, ^ (right-assoc), * / mod,
/// + -, &, comparisons, and, xor, or.
ast::Program parse_program(const std::vector<Token>& tokens);
ast::Program parse_program(std::string_view source);

/// One REPL line: any number of declarations and statements. An empty or
/// comment-only line yields an empty program.
ast::Program parse_interactive(std::string_view line);

/// Canonical source text; reparsing it yields the same tree.
std::string print_program(const ast::Program& program);
std::string print_expr(const ast::Expr& expr);

/// Position-free structural rendering, for comparing trees.
std::string to_sexpr(const ast::Program& program);

}  // namespace qclite
