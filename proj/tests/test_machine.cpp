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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qclite/error.hpp"
#include "qclite/machine/machine_state.hpp"
#include "support/oracle.hpp"

using namespace qclite;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::Runtime;
}

oracle::Vec state_of(const MachineState& m, int width) {
    oracle::Vec v(std::size_t{1} << width);
    for (std::size_t b = 0; b < v.size(); ++b)
        v[b] = m.amplitude(b);
    return v;
}

}  // namespace

TEST_CASE("allocation takes the lowest free qubits") {
    MachineState m(4);
    const auto a = m.allocate_register(1);
    const auto b = m.allocate_register(1);
    CHECK(a == RegisterMap{0});
    CHECK(b == RegisterMap{1});
    CHECK(m.format_dump().rfind("STATE: 2 / 4 qubits allocated, 2 / 4 qubits free\n", 0) == 0);
}

TEST_CASE("allocation errors") {
    MachineState m(4);
    CHECK(code_of([&] { m.allocate_register(0); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { m.allocate_register(5); }) == ErrorCode::OutOfQubits);
}

TEST_CASE("free checks emptiness and ownership") {
    MachineState m(4);
    m.allocate_register(2);
    const auto r = m.allocate_register(1);
    CHECK_NOTHROW(m.free_register(r));
    CHECK(code_of([&] { m.free_register(r); }) == ErrorCode::NotAllocated);

    const auto s = m.allocate_register(1);
    m.apply_primitive(PrimitiveGate::x(s[0]));
    CHECK(code_of([&] { m.free_register(s); }) == ErrorCode::NotEmpty);
}

TEST_CASE("rotation and Hadamard amplitudes") {
    MachineState m(4);
    m.allocate_register(2);
    m.apply_primitive(PrimitiveGate::h(1));
    m.apply_primitive(PrimitiveGate::rot(-std::numbers::pi / 3, 0));
    CHECK(std::abs(m.amplitude(0b00) - 0.612372) < 1e-6);
    CHECK(std::abs(m.amplitude(0b10) - 0.612372) < 1e-6);
    CHECK(std::abs(m.amplitude(0b01) - 0.353553) < 1e-6);
    CHECK(std::abs(m.amplitude(0b11) - 0.353553) < 1e-6);
    CHECK(m.format_terms(false) == "0.612372 |0000> + 0.612372 |0010> + 0.353553 |0001> + 0.353553 |0011>");
}

TEST_CASE("unsatisfied control leaves the state") {
    MachineState m(2);
    m.allocate_register(2);
    m.apply_primitive(PrimitiveGate::x(0, {1}));
    CHECK(m.amplitude(0) == Amplitude(1.0));
}

TEST_CASE("uncontrolled phase keeps the norm") {
    MachineState m(2);
    m.allocate_register(1);
    m.apply_primitive(PrimitiveGate::h(0));
    m.apply_primitive(PrimitiveGate::phase(0.7));
    CHECK(std::abs(m.norm_squared() - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(m.amplitude(0)) - std::sqrt(0.5)) < 1e-12);
}

TEST_CASE("primitive gates match their matrices") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    for (int trial = 0; trial < 40; ++trial) {
        MachineState m(4);
        m.allocate_register(4);
        oracle::Vec v(16);
        std::normal_distribution<double> g;
        double norm = 0;
        for (auto& a : v) {
            a = {g(rng), g(rng)};
            norm += std::norm(a);
        }
        for (auto& a : v)
            a /= std::sqrt(norm);
        m.set_amplitudes(v);
        const Qubit t = static_cast<Qubit>(rng() % 4);
        std::vector<Qubit> controls;
        for (Qubit q = 0; q < 4; ++q)
            if (q != t && rng() % 2)
                controls.push_back(q);
        PrimitiveGate gate;
        switch (trial % 4) {
            case 0: gate = PrimitiveGate::x(t, controls); break;
            case 1: gate = PrimitiveGate::h(t, controls); break;
            case 2: gate = PrimitiveGate::rot(angle(rng), t, controls); break;
            case 3: gate = PrimitiveGate::phase(angle(rng), controls); break;
        }
        m.apply_primitive(gate);
        oracle::apply_gate(v, gate);
        CHECK(oracle::max_diff({state_of(m, 4)}, {v}) < 1e-12);
        CHECK(std::abs(m.norm_squared() - 1.0) < 1e-12);
    }
}

TEST_CASE("gate matrices are unitary") {
    for (const auto& gate : {PrimitiveGate::h(0, {1}), PrimitiveGate::rot(0.3, 1), PrimitiveGate::phase(1.1, {0}),
                             PrimitiveGate::x(1, {0})})
        CHECK(oracle::is_unitary(oracle::tape_matrix(GateTape({gate}), 2).m));
}

TEST_CASE("gates act locally") {
    MachineState m(3);
    m.allocate_register(3);
    m.apply_primitive(PrimitiveGate::x(2));
    m.apply_primitive(PrimitiveGate::h(0));
    CHECK(std::abs(m.amplitude(0b100) - std::sqrt(0.5)) < 1e-12);
    CHECK(std::abs(m.amplitude(0b101) - std::sqrt(0.5)) < 1e-12);
}

TEST_CASE("measuring a basis state is deterministic") {
    MachineState m(4);
    const auto r = m.allocate_register(3);
    m.set_basis_state(5);
    CHECK(m.measure_register(r) == 5);
    CHECK(m.amplitude(5) == Amplitude(1.0));
}

TEST_CASE("measurement is reproducible and fair") {
    auto run = [](std::uint64_t seed) {
        MachineState m(1, seed);
        const auto q = m.allocate_register(1);
        std::vector<std::uint64_t> outcomes;
        for (int i = 0; i < 10000; ++i) {
            m.reset_state();
            m.apply_primitive(PrimitiveGate::h(q[0]));
            outcomes.push_back(m.measure_register(q));
        }
        return outcomes;
    };
    const auto a = run(11);
    CHECK(a == run(11));
    const auto ones = std::count(a.begin(), a.end(), 1u);
    CHECK(std::abs(ones - 5000) <= 150);
}

TEST_CASE("measurement collapses correlated qubits") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        MachineState m(2, seed);
        const auto r = m.allocate_register(2);
        m.apply_primitive(PrimitiveGate::h(0));
        m.apply_primitive(PrimitiveGate::x(1, {0}));
        const auto first = m.measure_register(r.index(0));
        CHECK(m.measure_register(r.index(1)) == first);
    }
}

TEST_CASE("reset returns to the zero state") {
    MachineState m(3);
    m.allocate_register(3);
    m.apply_primitive(PrimitiveGate::h(0));
    m.apply_primitive(PrimitiveGate::x(2));
    m.reset_state();
    CHECK(m.amplitude(0) == Amplitude(1.0));
    CHECK(m.allocated_count() == 3);
}

TEST_CASE("emptiness") {
    MachineState m(2);
    const auto r = m.allocate_register(1);
    CHECK(m.is_empty_register(r));
    m.apply_primitive(PrimitiveGate::x(r[0]));
    CHECK_FALSE(m.is_empty_register(r));
    m.apply_primitive(PrimitiveGate::x(r[0]));
    m.apply_primitive(PrimitiveGate::h(r[0]));
    m.apply_primitive(PrimitiveGate::h(r[0]));
    CHECK(m.is_empty_register(r));
}

TEST_CASE("term formatting") {
    MachineState m(32);
    m.allocate_register(2);
    CHECK(m.format_terms(true) == "1 |00>");
    MachineState u(6);
    u.allocate_register(4);
    const auto b = u.allocate_register(1);
    const auto a = u.allocate_register(1);
    u.apply_primitive(PrimitiveGate::h(a[0]));
    u.apply_primitive(PrimitiveGate::h(b[0]));
    CHECK(u.format_terms(false) == "0.5 |000000> + 0.5 |010000> + 0.5 |100000> + 0.5 |110000>");
}

TEST_CASE("register derivation") {
    const RegisterMap q{3, 4, 5, 6};
    CHECK(q.slice(0, 2) == RegisterMap{3, 4, 5});
    CHECK(q.index(1) == RegisterMap{4});
    CHECK(RegisterMap{5}.concat(RegisterMap{4}) == RegisterMap{5, 4});
    CHECK(code_of([&] { q.index(4); }) == ErrorCode::OutOfBounds);
    CHECK(code_of([&] { q.concat(RegisterMap{6}); }) == ErrorCode::Overlap);
    CHECK(RegisterMap{5, 4}.extract(0b010000) == 2);
}

TEST_CASE("active span grows with the highest allocated qubit") {
    MachineState m(32);
    m.allocate_register(2);
    CHECK(m.active_qubits() == 2);
    const auto big = m.allocate_register(10);
    CHECK(m.active_qubits() == 12);
    m.free_register(big);
    CHECK(m.active_qubits() == 2);
    CHECK(code_of([&] { m.allocate_register(30); }) == ErrorCode::SimulatorLimit);
}
