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

#include "qclite/error.hpp"

namespace qclite {

enum class TokenKind { Keyword, Identifier, IntLiteral, RealLiteral, StringLiteral, Symbol, Comment };

struct Token {
    TokenKind kind = TokenKind::Symbol;
    std::string text;
    int line = 0;
    int column = 0;

    SourcePos pos() const { return {line, column}; }
    bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
    bool is_symbol(std::string_view t) const { return is(TokenKind::Symbol, t); }
    bool is_keyword(std::string_view t) const { return is(TokenKind::Keyword, t); }

    friend bool operator==(const Token&, const Token&) = default;
};

bool is_keyword(std::string_view word);

/// Splits ASCII source into tokens. `//` comments are dropped unless
/// `keep_comments` is set. Throws a Lexical error on an invalid character.
std::vector<Token> tokenize(std::string_view source, bool keep_comments = false);

}  // namespace qclite
