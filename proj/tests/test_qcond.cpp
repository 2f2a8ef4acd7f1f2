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

#include <random>

#include "doctest.h"
#include "qclite/error.hpp"
#include "qclite/machine/machine_state.hpp"
#include "qclite/qcond/enable.hpp"
#include "qclite/stdgates.hpp"
#include "qclite/syntax/parser.hpp"
#include "support/fixture.hpp"
#include "support/oracle.hpp"
#include "support/random_cond.hpp"

using namespace qclite;

namespace {

const CondExpr a = CondExpr::qubit(0);
const CondExpr b = CondExpr::qubit(1);

bool truth_equal(const ZhegalkinPoly& p, const CondExpr& c, int qubits) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << qubits); ++s)
        if (p.evaluate(s) != c.evaluate(s))
            return false;
    return true;
}

}  // namespace

TEST_CASE("xdnf of a conjunction") {
    const auto p = to_xdnf(CondExpr::conj(a, b));
    CHECK_FALSE(p.constant());
    CHECK(p.monomials() == std::vector<Monomial>{{0, 1}});
}

TEST_CASE("xdnf of a disjunction") {
    const auto p = to_xdnf(CondExpr::disj(a, b));
    CHECK_FALSE(p.constant());
    CHECK(p.monomials() == std::vector<Monomial>{{0}, {1}, {0, 1}});
    for (std::uint64_t s = 0; s < 4; ++s)
        CHECK(p.evaluate(s) == ((s & 1) || (s & 2)));
}

TEST_CASE("xdnf of a negated disjunction") {
    const auto p = to_xdnf(CondExpr::negate(CondExpr::disj(a, b)));
    CHECK(p.constant());
    CHECK(p.monomials() == std::vector<Monomial>{{0}, {1}, {0, 1}});
    for (std::uint64_t s = 0; s < 4; ++s)
        CHECK(p.evaluate(s) == (s == 0));
}

TEST_CASE("xdnf matches random truth tables") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto tree = testing::RandomCond::generate(rng, 5, 4);
        const std::vector<Qubit> qubits{0, 1, 2, 3, 4};
        const auto cond = tree->to_cond(qubits);
        const auto p = to_xdnf(cond);
        for (std::uint64_t s = 0; s < 32; ++s)
            REQUIRE(p.evaluate(s) == tree->eval(s));
        CHECK(truth_equal(p, cond, 5));
    }
}

TEST_CASE("classical constants fold") {
    CHECK(to_xdnf(CondExpr::conj(a, CondExpr::constant(true))) == ZhegalkinPoly::variable(0));
    CHECK(to_xdnf(CondExpr::conj(a, CondExpr::constant(false))).is_zero());
    CHECK(to_xdnf(CondExpr::negate(CondExpr::constant(false))).is_one());
}

TEST_CASE("single monomial plan is direct") {
    MachineState m(3);
    m.allocate_register(2);
    const auto plan = synthesize_enable(to_xdnf(CondExpr::conj(a, b)), m);
    CHECK(plan.kind == EnablePlan::Kind::Direct);
    CHECK(plan.controls == std::vector<Qubit>{0, 1});
    CHECK(plan.compute.empty());
    CHECK(m.allocated_count() == 2);
}

TEST_CASE("disjunction plan synthesizes one enable qubit") {
    MachineState m(3);
    m.allocate_register(2);
    const auto plan = synthesize_enable(to_xdnf(CondExpr::disj(a, b)), m);
    REQUIRE(plan.kind == EnablePlan::Kind::Synthesized);
    const Qubit e = (*plan.scratch)[0];
    CHECK(e == 2);
    const GateTape want({PrimitiveGate::x(e, {0}), PrimitiveGate::x(e, {1}), PrimitiveGate::x(e, {0, 1})});
    CHECK(plan.compute == want);
    for (std::uint64_t s = 0; s < 4; ++s) {
        m.set_basis_state(s);
        m.apply_tape(plan.compute);
        const bool on = std::abs(m.amplitude(s | 4) - 1.0) < 1e-12;
        CHECK(on == (s != 0));
        m.apply_tape(plan.uncompute);
        CHECK(std::abs(m.amplitude(s) - 1.0) < 1e-12);
    }
}

TEST_CASE("constant true runs unconditioned") {
    MachineState m(2);
    const auto plan = synthesize_enable(to_xdnf(CondExpr::negate(CondExpr::constant(false))), m);
    CHECK(plan.kind == EnablePlan::Kind::Always);
    CHECK(plan.compute.empty());
    CHECK(synthesize_enable(ZhegalkinPoly::zero(), m).kind == EnablePlan::Kind::Never);
}

TEST_CASE("conditionalized inc is block diagonal") {
    testing::Lab lab;
    const auto x = lab.alloc(3), e = lab.alloc(1);
    const GateTape inc = lab.tape("inc", {Value(x)});
    const auto m = oracle::tape_matrix(conditionalize_tape(inc, e.qubits()), 4);
    const auto want = oracle::block_conditional(oracle::permutation_matrix(8, [](std::size_t i) { return (i + 1) % 8; }));
    CHECK(oracle::max_diff(m.m, want) < oracle::kTol);
    const auto cinc = oracle::tape_matrix(lab.tape("cinc", {Value(x), Value(e)}), 4);
    CHECK(oracle::max_diff(m.m, cinc.m) < oracle::kTol);
}

TEST_CASE("empty enable leaves the tape") {
    const GateTape t({PrimitiveGate::h(0), PrimitiveGate::x(1, {0})});
    CHECK(conditionalize_tape(t, {}) == t);
}

TEST_CASE("enable set to ones acts like the plain tape") {
    testing::Lab lab;
    const auto x = lab.alloc(2), e = lab.alloc(2);
    const GateTape dft = lab.tape("dft", {Value(x)});
    const GateTape cond = conditionalize_tape(dft, e.qubits());
    for (std::uint64_t i = 0; i < 4; ++i) {
        oracle::Vec plain(16), gated(16);
        plain[testing::place(x, i) | testing::place(e, 3)] = 1.0;
        gated = plain;
        oracle::apply_tape(plain, dft);
        oracle::apply_tape(gated, cond);
        CHECK(oracle::max_diff({plain}, {gated}) < oracle::kTol);
    }
}

TEST_CASE("gates on enable qubits overlap") {
    const GateTape t({PrimitiveGate::x(1)});
    CHECK_THROWS_AS(conditionalize_tape(t, {1}), Error);
}

TEST_CASE("quantum if transcript") {
    testing::Lab lab(32);
    lab.interp.run_source("qureg q[4]; qureg b[1]; qureg a[1]; H(a & b);");
    lab.interp.run_source("if a and b { inc(q); }");
    CHECK(lab.machine.format_terms(true) == "0.5 |000000> + 0.5 |010000> + 0.5 |100000> + 0.5 |110001>");
    lab.interp.run_source("if a or b { inc(q); }");
    CHECK(lab.machine.format_terms(true) == "0.5 |000000> + 0.5 |010001> + 0.5 |100001> + 0.5 |110010>");
    lab.interp.run_source("if not (a or b) { inc(q); }");
    CHECK(lab.machine.format_terms(true) == "0.5 |000001> + 0.5 |010001> + 0.5 |100001> + 0.5 |110010>");
    CHECK(lab.machine.allocated_count() == 6);
}

TEST_CASE("else branch runs on the negated condition") {
    testing::Lab lab;
    lab.interp.run_source("qureg c[1]; qureg t[2];");
    const RegisterMap c{0}, t{1, 2};
    const auto prog = parse_program("if c { Not(t[0]); } else { Not(t[1]); }");
    for (std::uint64_t v = 0; v < 2; ++v) {
        lab.machine.set_basis_state(v);
        lab.interp.run_program(prog);
        CHECK(std::abs(lab.machine.amplitude(v | testing::place(t, v ? 1 : 2)) - 1.0) < 1e-12);
    }
}

TEST_CASE("demux basis sweep") {
    testing::Lab lab;
    const auto s = lab.alloc(2), q = lab.alloc(4);
    for (std::uint64_t k = 0; k < 4; ++k) {
        lab.machine.set_basis_state(testing::place(s, k));
        lab.interp.call("demux", {Value(s), Value(q)});
        CHECK(std::abs(lab.machine.amplitude(testing::place(s, k) | testing::place(q, 1u << k)) - 1.0) < 1e-12);
    }
}

TEST_CASE("fork path conditions are exclusive and exhaustive") {
    testing::Lab lab(24);
    const auto s = lab.alloc(3), q = lab.alloc(8);
    lab.tape("demux", {Value(s), Value(q)});
    const auto& paths = lab.interp.last_fork_paths();
    REQUIRE(paths.size() == 8);
    ZhegalkinPoly sum;
    for (const auto& p : paths)
        sum = sum ^ to_xdnf(p.condition());
    CHECK(sum.is_one());
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j)
            CHECK((to_xdnf(paths[i].condition()) * to_xdnf(paths[j].condition())).is_zero());
}

TEST_CASE("fork with identical branches equals the unforked call") {
    testing::Lab lab;
    lab.interp.run_source(R"(
qufunct same(quconst c, qureg x) { int k = 0; if c { k = 1; } else { k = 2; } Not(x); }
qufunct plain(quconst c, qureg x) { Not(x); })");
    const auto c = lab.alloc(1), x = lab.alloc(2);
    const auto forked = oracle::tape_matrix(lab.tape("same", {Value(c), Value(x)}), 3);
    const auto plain = oracle::tape_matrix(lab.tape("plain", {Value(c), Value(x)}), 3);
    CHECK(oracle::max_diff(forked.m, plain.m) < oracle::kTol);
}

TEST_CASE("nested quantum ifs equal the conjunction") {
    testing::Lab lab;
    lab.interp.run_source(R"(
qufunct nested(quconst a, quconst b, qureg x) { if a { if b { inc(x); } } }
qufunct joint(quconst a, quconst b, qureg x) { if a and b { inc(x); } }
qufunct nested_or(quconst a, quconst b, qureg x) { if a or b { if not b { inc(x); } } }
qufunct joint_or(quconst a, quconst b, qureg x) { if a and not b { inc(x); } })");
    const auto ra = lab.alloc(1), rb = lab.alloc(2), x = lab.alloc(2);
    const std::vector<Value> args{Value(ra), Value(rb), Value(x)};
    const auto n = oracle::tape_matrix(lab.tape("nested", args), 5);
    const auto j = oracle::tape_matrix(lab.tape("joint", args), 5);
    CHECK(n.ancillas_clean);
    CHECK(oracle::max_diff(n.m, j.m) < oracle::kTol);
    const auto no = oracle::tape_matrix(lab.tape("nested_or", args), 5);
    const auto jo = oracle::tape_matrix(lab.tape("joint_or", args), 5);
    CHECK(no.ancillas_clean);
    CHECK(oracle::max_diff(no.m, jo.m) < oracle::kTol);
}
