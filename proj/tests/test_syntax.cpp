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

#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "qclite/error.hpp"
#include "qclite/syntax/parser.hpp"
#include "qclite/syntax/token.hpp"
#include "support/fixture.hpp"

using namespace qclite;

namespace {

const char* const kDft = R"(operator dft(qureg q) { // Quantum Fourier Transform
  const n=#q;           // set n to length of input
  int i; int j;         // declare loop counters
  for i=1 to n {
    for j=1 to i-1 {    // apply conditional phase gates
      if q[n-i] and q[n-j] { Phase(pi/2^(i-j)); }
    }
    H(q[n-i]);          // qubit rotation
  }
  flip(q);              // swap bit order of the output
})";

const char* const kInc = R"(qufunct inc(qureg x) {      // increment register
  int i;
  for i = #x-1 to 1 step -1 {
    CNot(x[i],x[0:i-1]);    // apply controlled-not from
  }                         // MSB to LSB
  Not(x[0]);
})";

const char* const kParity = R"(qufunct parity(quconst x,quvoid y) {
  int i;
  for i = 0 to #x-1 {
    CNot(y,x[i]);           // flip parity for each set bit
  }
})";

const char* const kCinc = R"(qufunct cinc(qureg x,quconst e) {
  int i;
  for i = #x-1 to 1 step -1 { CNot(x[i],x[0:i-1] & e); }
  CNot(x[0],e);
})";

const char* const kDemux = R"(cond qufunct demux(quconst s,qureg q) {
  int i;
  int n = 0;
  for i=0 to #s-1 {             // accumulate content of
    if s[i] { n=n+2^i; }        //   selection register in a
  }                             //   classical variable
  Not(q[n]);                    // flip selected output qubit
})";

std::vector<std::string> texts(const std::vector<Token>& tokens) {
    std::vector<std::string> out;
    for (const auto& t : tokens)
        out.push_back(t.text);
    return out;
}

}  // namespace

TEST_CASE("tokenize a register declaration") {
    const auto tokens = tokenize("qureg a[1];");
    REQUIRE(tokens.size() == 6);
    CHECK(tokens[0].is_keyword("qureg"));
    CHECK(tokens[1].kind == TokenKind::Identifier);
    CHECK(tokens[1].text == "a");
    CHECK(tokens[2].is_symbol("["));
    CHECK(tokens[3].kind == TokenKind::IntLiteral);
    CHECK(tokens[3].text == "1");
    CHECK(tokens[4].is_symbol("]"));
    CHECK(tokens[5].is_symbol(";"));
}

TEST_CASE("tokenize drops line comments") {
    const auto tokens = tokenize("Rot(-pi/3,a); // c");
    CHECK(texts(tokens) == std::vector<std::string>{"Rot", "(", "-", "pi", "/", "3", ",", "a", ")", ";"});
    const auto kept = tokenize("Rot(-pi/3,a); // c", true);
    REQUIRE(kept.size() == tokens.size() + 1);
    CHECK(kept.back().kind == TokenKind::Comment);
}

TEST_CASE("tokenize power expression") {
    CHECK(texts(tokenize("2^(i-j)")) == std::vector<std::string>{"2", "^", "(", "i", "-", "j", ")"});
}

TEST_CASE("tokenize positions and literals") {
    const auto tokens = tokenize("x\n  1.5e3 \"hi\"");
    REQUIRE(tokens.size() == 3);
    CHECK(tokens[1].kind == TokenKind::RealLiteral);
    CHECK(tokens[1].line == 2);
    CHECK(tokens[1].column == 3);
    CHECK(tokens[2].kind == TokenKind::StringLiteral);
}

TEST_CASE("tokenize rejects invalid characters") {
    try {
        tokenize("qureg a[1]; $");
        FAIL("expected a lexical error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Lexical);
        CHECK(e.pos() == SourcePos{1, 13});
    }
}

TEST_CASE("parse the Fourier transform listing") {
    const auto program = parse_program(kDft);
    const auto subs = program.subroutines();
    REQUIRE(subs.size() == 1);
    CHECK(subs[0]->level == Level::Operator);
    CHECK(subs[0]->name == "dft");
    const auto& body = subs[0]->body;
    const ast::For* outer = nullptr;
    for (const auto& s : body)
        if (auto f = ast::get<ast::For>(*s))
            outer = f;
    REQUIRE(outer != nullptr);
    const auto* inner = ast::get<ast::For>(*outer->body.at(0));
    REQUIRE(inner != nullptr);
    CHECK(ast::get<ast::If>(*inner->body.at(0)) != nullptr);
}

TEST_CASE("cond prefix sets the flag") {
    const auto program = parse_program("cond qufunct inc(qureg x,quconst e) { }");
    const auto subs = program.subroutines();
    REQUIRE(subs.size() == 1);
    CHECK(subs[0]->is_cond);
    CHECK(subs[0]->level == Level::Qufunct);
    REQUIRE(subs[0]->params.size() == 2);
    CHECK(std::get<QuType>(subs[0]->params[1].type) == QuType::Quconst);
}

TEST_CASE("grammar admits measure inside an operator") {
    CHECK_NOTHROW(parse_program("operator f(qureg q){ measure q; }"));
}

TEST_CASE("listings print and reparse to the same tree") {
    for (const char* src : {kDft, kInc, kParity, kCinc, kDemux}) {
        const auto first = parse_program(src);
        const std::string printed = print_program(first);
        const auto second = parse_program(printed);
        CHECK(to_sexpr(first) == to_sexpr(second));
        CHECK(print_program(second) == printed);
    }
}

TEST_CASE("corpus files parse") {
    for (const char* name : {"library.qcl", "demux_demo.qcl", "retry_demo.qcl"}) {
        const auto program = parse_program(testing::read_file(testing::corpus_path(name)));
        CHECK(to_sexpr(program) == to_sexpr(parse_program(print_program(program))));
    }
}

TEST_CASE("parsing is deterministic") {
    CHECK(to_sexpr(parse_program(kDemux)) == to_sexpr(parse_program(kDemux)));
}

TEST_CASE("interactive lines") {
    const auto dump = parse_interactive("dump;");
    REQUIRE(dump.statements().size() == 1);
    CHECK(ast::get<ast::Dump>(*dump.statements()[0]) != nullptr);

    const auto qif = parse_interactive("if a and b { inc(q); }");
    REQUIRE(qif.statements().size() == 1);
    const auto* node = ast::get<ast::If>(*qif.statements()[0]);
    REQUIRE(node != nullptr);
    const auto* cond = ast::get<ast::Binary>(*node->cond);
    REQUIRE(cond != nullptr);
    CHECK(cond->op == ast::BinaryOp::And);

    CHECK(parse_interactive("").items.empty());
    CHECK(parse_interactive("   // nothing").items.empty());
}

TEST_CASE("every transcript line parses") {
    for (const char* name : {"rot_hadamard_dump.in", "dft_roundtrip.in", "conditional_increment.in"}) {
        std::istringstream in(testing::read_file(testing::golden_path(name)));
        std::string line;
        while (std::getline(in, line))
            CHECK_NOTHROW(parse_interactive(line));
    }
}

TEST_CASE("operator precedence") {
    const auto power = parse_program("x = 2 ^ 3 ^ 2;");
    const auto* pow = ast::get<ast::Binary>(*std::get<ast::Assign>(power.statements()[0]->node).value);
    REQUIRE(pow != nullptr);
    CHECK(ast::get<ast::IntLit>(*pow->lhs) != nullptr);
    CHECK(ast::get<ast::Binary>(*pow->rhs) != nullptr);

    const auto logic = parse_program("x = a or b and not c;");
    const auto* top = ast::get<ast::Binary>(*std::get<ast::Assign>(logic.statements()[0]->node).value);
    REQUIRE(top != nullptr);
    CHECK(top->op == ast::BinaryOp::Or);
    const auto* rhs = ast::get<ast::Binary>(*top->rhs);
    REQUIRE(rhs != nullptr);
    CHECK(rhs->op == ast::BinaryOp::And);
}

TEST_CASE("syntax errors carry a position") {
    try {
        parse_program("qureg a[1;");
        FAIL("expected a syntax error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Syntax);
        CHECK(e.pos().valid());
    }
}
