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

#include <array>
#include <cctype>

#include "qclite/syntax/token.hpp"

namespace qclite {

namespace {

constexpr std::array<std::string_view, 30> kKeywords = {
    "procedure", "operator", "qufunct", "cond",  "const",  "int",     "real",   "complex",
    "boolean",   "qureg",    "quconst", "quvoid", "quscratch", "if",  "else",   "for",
    "to",        "step",     "while",   "measure", "reset",  "dump",  "print",  "return",
    "and",       "or",       "not",     "xor",    "mod",    "exit",
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
public:
    Lexer(std::string_view src, bool keep_comments) : src_(src), keep_comments_(keep_comments) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (i_ < src_.size()) {
            const char c = src_[i_];
            if (c == '\n') {
                advance();
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
                advance();
                continue;
            }
            const int line = line_, col = col_;
            if (c == '/' && peek(1) == '/') {
                const std::size_t start = i_;
                while (i_ < src_.size() && src_[i_] != '\n')
                    advance();
                if (keep_comments_)
                    out.push_back({TokenKind::Comment, std::string(src_.substr(start, i_ - start)), line, col});
                continue;
            }
            if (is_ident_start(c)) {
                const std::size_t start = i_;
                while (i_ < src_.size() && is_ident_char(src_[i_]))
                    advance();
                std::string word(src_.substr(start, i_ - start));
                const auto kind = is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier;
                out.push_back({kind, std::move(word), line, col});
                continue;
            }
            if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
                out.push_back(number(line, col));
                continue;
            }
            if (c == '"') {
                out.push_back(string_literal(line, col));
                continue;
            }
            out.push_back(symbol(line, col));
        }
        return out;
    }

private:
    char peek(std::size_t ahead) const { return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0'; }

    void advance() {
        if (src_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    Token number(int line, int col) {
        const std::size_t start = i_;
        bool real = false;
        while (i_ < src_.size() && is_digit(src_[i_]))
            advance();
        if (peek(0) == '.' && is_digit(peek(1))) {
            real = true;
            advance();
            while (i_ < src_.size() && is_digit(src_[i_]))
                advance();
        } else if (peek(0) == '.' && !is_ident_start(peek(1))) {
            real = true;
            advance();
        }
        if ((peek(0) == 'e' || peek(0) == 'E') &&
            (is_digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
            real = true;
            advance();
            if (peek(0) == '+' || peek(0) == '-')
                advance();
            while (i_ < src_.size() && is_digit(src_[i_]))
                advance();
        }
        return {real ? TokenKind::RealLiteral : TokenKind::IntLiteral, std::string(src_.substr(start, i_ - start)),
                line, col};
    }

    Token string_literal(int line, int col) {
        advance();
        std::string text;
        while (true) {
            if (i_ >= src_.size() || src_[i_] == '\n')
                throw Error(ErrorCode::Lexical, "unterminated string literal", {line, col});
            const char c = src_[i_];
            if (c == '"') {
                advance();
                break;
            }
            if (c == '\\') {
                advance();
                if (i_ >= src_.size())
                    throw Error(ErrorCode::Lexical, "unterminated string literal", {line, col});
                const char e = src_[i_];
                text += e == 'n' ? '\n' : e == 't' ? '\t' : e;
                advance();
                continue;
            }
            text += c;
            advance();
        }
        return {TokenKind::StringLiteral, std::move(text), line, col};
    }

    Token symbol(int line, int col) {
        static constexpr std::array<std::string_view, 4> two = {"==", "!=", "<=", ">="};
        for (auto s : two) {
            if (src_.substr(i_, 2) == s) {
                advance();
                advance();
                return {TokenKind::Symbol, std::string(s), line, col};
            }
        }
        const char c = src_[i_];
        static constexpr std::string_view single = "()[]{};,:=<>+-*/^&!#";
        if (single.find(c) == std::string_view::npos) {
            std::string shown = std::isprint(static_cast<unsigned char>(c)) ? std::string(1, c)
                                                                             : "\\x" + std::to_string(int(c));
            throw Error(ErrorCode::Lexical, "invalid character '" + shown + "'", {line, col});
        }
        advance();
        return {TokenKind::Symbol, std::string(1, c), line, col};
    }

    std::string_view src_;
    bool keep_comments_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

bool is_keyword(std::string_view word) {
    for (auto k : kKeywords)
        if (k == word)
            return true;
    return false;
}

std::vector<Token> tokenize(std::string_view source, bool keep_comments) {
    return Lexer(source, keep_comments).run();
}

}  // namespace qclite
