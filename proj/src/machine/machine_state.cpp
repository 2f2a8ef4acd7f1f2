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

#include "qclite/machine/machine_state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "qclite/error.hpp"

namespace qclite {

MachineState::MachineState(int total_qubits, std::uint64_t seed, int active_limit)
    : total_(total_qubits), active_limit_(active_limit), rng_(seed) {
    if (total_qubits < 1 || total_qubits > kMaxTotalQubits)
        throw Error(ErrorCode::InvalidArgument,
                    "machine size must be between 1 and " + std::to_string(kMaxTotalQubits) + " qubits");
    if (active_limit < 1)
        throw Error(ErrorCode::InvalidArgument, "simulator qubit limit must be positive");
    allocated_.assign(static_cast<std::size_t>(total_), false);
    amps_.assign(1, Amplitude{1.0, 0.0});
}

int MachineState::allocated_count() const {
    return static_cast<int>(std::count(allocated_.begin(), allocated_.end(), true));
}

bool MachineState::is_allocated(Qubit q) const {
    return q >= 0 && q < total_ && allocated_[static_cast<std::size_t>(q)];
}

std::vector<Qubit> MachineState::allocated_qubits() const {
    std::vector<Qubit> out;
    for (Qubit q = 0; q < total_; ++q)
        if (allocated_[static_cast<std::size_t>(q)])
            out.push_back(q);
    return out;
}

RegisterMap MachineState::allocate_register(int count) {
    if (count < 1)
        throw Error(ErrorCode::InvalidArgument, "register size must be at least 1, got " + std::to_string(count));
    std::vector<Qubit> picked;
    for (Qubit q = 0; q < total_ && static_cast<int>(picked.size()) < count; ++q)
        if (!allocated_[static_cast<std::size_t>(q)])
            picked.push_back(q);
    if (static_cast<int>(picked.size()) < count)
        throw Error(ErrorCode::OutOfQubits, "cannot allocate " + std::to_string(count) + " qubits, only " +
                                                std::to_string(free_count()) + " free");
    const int needed = picked.back() + 1;
    if (needed > active_limit_)
        throw Error(ErrorCode::SimulatorLimit, "allocation would exceed the simulator limit of " +
                                                   std::to_string(active_limit_) + " active qubits");
    grow_to(needed);
    for (Qubit q : picked)
        allocated_[static_cast<std::size_t>(q)] = true;
    return RegisterMap(std::move(picked));
}

void MachineState::free_register(const RegisterMap& reg) {
    for (Qubit q : reg)
        require_allocated(q, "freed");
    if (!is_empty_register(reg))
        throw Error(ErrorCode::NotEmpty, "cannot free non-empty register " + reg.to_string());
    release_register(reg);
}

void MachineState::release_register(const RegisterMap& reg) {
    for (Qubit q : reg)
        require_allocated(q, "freed");
    for (Qubit q : reg)
        allocated_[static_cast<std::size_t>(q)] = false;
    shrink();
}

void MachineState::require_allocated(Qubit q, const char* role) const {
    if (!is_allocated(q))
        throw Error(ErrorCode::NotAllocated, std::string("qubit ") + std::to_string(q) + " " + role +
                                                 " but not allocated");
}

void MachineState::grow_to(int active) {
    if (active <= active_)
        return;
    amps_.resize(std::size_t{1} << active, Amplitude{});
    active_ = active;
}

void MachineState::shrink() {
    // Drop trailing free qubits whose upper half is all zero. A dirty free
    // qubit (possible only with checks disabled) stays in the array.
    while (active_ > 0 && !allocated_[static_cast<std::size_t>(active_ - 1)]) {
        const std::size_t half = std::size_t{1} << (active_ - 1);
        double upper = 0.0;
        for (std::size_t i = half; i < amps_.size(); ++i)
            upper += std::norm(amps_[i]);
        if (upper > kTolerance * kTolerance)
            break;
        amps_.resize(half);
        --active_;
    }
}

void MachineState::apply_primitive(const PrimitiveGate& gate) {
    if (gate.kind != GateKind::Phase && !gate.target)
        throw Error(ErrorCode::InvalidArgument, "gate " + describe(gate) + " needs a target");
    if (gate.target)
        require_allocated(*gate.target, "targeted");
    std::uint64_t cmask = 0;
    for (Qubit c : gate.controls) {
        require_allocated(c, "used as control");
        if (gate.target && c == *gate.target)
            throw Error(ErrorCode::Overlap, "gate target " + std::to_string(c) + " is also a control");
        cmask |= 1ULL << c;
    }
    ++mutations_;
    const std::size_t n = amps_.size();

    if (gate.kind == GateKind::Phase) {
        const Amplitude factor = std::polar(1.0, gate.angle);
        for (std::size_t i = 0; i < n; ++i)
            if ((i & cmask) == cmask)
                amps_[i] *= factor;
        return;
    }

    const std::uint64_t tbit = 1ULL << *gate.target;
    double m00 = 0, m01 = 0, m10 = 0, m11 = 0;
    switch (gate.kind) {
        case GateKind::X:
            m01 = m10 = 1.0;
            break;
        case GateKind::H:
            m00 = m01 = m10 = M_SQRT1_2;
            m11 = -M_SQRT1_2;
            break;
        case GateKind::Rot: {
            const double c = std::cos(gate.angle / 2), s = std::sin(gate.angle / 2);
            m00 = c;
            m01 = s;
            m10 = -s;
            m11 = c;
            break;
        }
        case GateKind::Phase:
            break;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if ((i & tbit) || (i & cmask) != cmask)
            continue;
        const std::size_t j = i | tbit;
        if (gate.kind == GateKind::X) {
            std::swap(amps_[i], amps_[j]);
            continue;
        }
        const Amplitude a0 = amps_[i], a1 = amps_[j];
        amps_[i] = m00 * a0 + m01 * a1;
        amps_[j] = m10 * a0 + m11 * a1;
    }
}

void MachineState::apply_tape(const GateTape& tape) {
    for (const auto& op : tape)
        emit(op);
}

void MachineState::emit(const TapeOp& op) {
    if (const auto* gate = std::get_if<PrimitiveGate>(&op)) {
        apply_primitive(*gate);
        return;
    }
    const auto& check = std::get<EmptinessCheck>(op);
    if (checks_ && !is_empty_qubits(check.qubits))
        throw Error(ErrorCode::NotEmpty, check.what);
}

std::uint64_t MachineState::measure_register(const RegisterMap& reg) {
    for (Qubit q : reg)
        require_allocated(q, "measured");
    std::map<std::uint64_t, double> probs;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        const double p = std::norm(amps_[i]);
        if (p > 0)
            probs[reg.extract(i)] += p;
    }
    const double r = random_uniform();
    double total = 0;
    for (const auto& [value, p] : probs)
        total += p;
    std::uint64_t outcome = probs.empty() ? 0 : probs.rbegin()->first;
    double acc = 0;
    for (const auto& [value, p] : probs) {
        acc += p / total;
        if (r < acc) {
            outcome = value;
            break;
        }
    }
    const double keep = probs[outcome];
    const double scale = 1.0 / std::sqrt(keep);
    for (std::size_t i = 0; i < amps_.size(); ++i)
        amps_[i] = reg.extract(i) == outcome ? amps_[i] * scale : Amplitude{};
    ++mutations_;
    return outcome;
}

void MachineState::reset_state() {
    std::fill(amps_.begin(), amps_.end(), Amplitude{});
    amps_[0] = 1.0;
    ++mutations_;
}

bool MachineState::is_empty_register(const RegisterMap& reg) const {
    for (Qubit q : reg)
        require_allocated(q, "inspected");
    return is_empty_qubits(reg.qubits());
}

bool MachineState::is_empty_qubits(const std::vector<Qubit>& qubits) const {
    std::uint64_t mask = 0;
    for (Qubit q : qubits)
        mask |= 1ULL << q;
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if ((i & mask) && std::abs(amps_[i]) > kTolerance)
            return false;
    return true;
}

Amplitude MachineState::amplitude(std::uint64_t basis) const {
    return basis < amps_.size() ? amps_[basis] : Amplitude{};
}

void MachineState::set_amplitudes(std::span<const Amplitude> amps) {
    if (amps.size() != amps_.size())
        throw Error(ErrorCode::InvalidArgument, "amplitude vector has " + std::to_string(amps.size()) +
                                                    " entries, expected " + std::to_string(amps_.size()));
    std::copy(amps.begin(), amps.end(), amps_.begin());
    ++mutations_;
}

void MachineState::set_basis_state(std::uint64_t basis) {
    if (basis >= amps_.size())
        throw Error(ErrorCode::InvalidArgument, "basis state outside the active qubits");
    std::fill(amps_.begin(), amps_.end(), Amplitude{});
    amps_[basis] = 1.0;
    ++mutations_;
}

double MachineState::norm_squared() const {
    double s = 0;
    for (const auto& a : amps_)
        s += std::norm(a);
    return s;
}

double MachineState::random_uniform() {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

namespace {

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string ket(std::uint64_t basis, const std::vector<Qubit>& qubits) {
    std::string out = "|";
    for (auto it = qubits.rbegin(); it != qubits.rend(); ++it)
        out += ((basis >> *it) & 1ULL) ? '1' : '0';
    return out + ">";
}

}  // namespace

std::string format_coefficient(Amplitude c) {
    const bool has_re = std::abs(c.real()) >= kPrintThreshold;
    const bool has_im = std::abs(c.imag()) >= kPrintThreshold;
    if (!has_im)
        return format_real(has_re ? c.real() : 0.0);
    if (!has_re)
        return format_real(c.imag()) + "i";
    std::string out = format_real(c.real());
    out += c.imag() < 0 ? "-" : "+";
    return out + format_real(std::abs(c.imag())) + "i";
}

std::string MachineState::format_terms(bool allocated_only) const {
    std::vector<Qubit> shown;
    if (allocated_only) {
        shown = allocated_qubits();
    } else {
        for (Qubit q = 0; q < total_; ++q)
            shown.push_back(q);
    }

    struct Term {
        long long key;
        std::size_t index;
    };
    std::vector<Term> terms;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        const double mag = std::abs(amps_[i]);
        if (mag > kPrintThreshold)
            terms.push_back({std::llround(mag * 1e9), i});
    }
    // Descending magnitude, ties by ascending basis index.
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        if (a.key != b.key)
            return a.key > b.key;
        return a.index < b.index;
    });

    std::string out;
    for (const auto& t : terms) {
        if (!out.empty())
            out += " + ";
        out += format_coefficient(amps_[t.index]) + " " + ket(t.index, shown);
    }
    return out;
}

std::string MachineState::format_dump() const {
    const int a = allocated_count();
    const std::string n = std::to_string(total_);
    return "STATE: " + std::to_string(a) + " / " + n + " qubits allocated, " + std::to_string(total_ - a) + " / " +
           n + " qubits free\n" + format_terms(false);
}

}  // namespace qclite
