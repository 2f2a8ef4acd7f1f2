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

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qclite/machine/gate.hpp"
#include "qclite/machine/register_map.hpp"

namespace qclite {

using Amplitude = std::complex<double>;

/// Amplitudes below this magnitude are not printed.
inline constexpr double kPrintThreshold = 1e-8;
/// Tolerance for emptiness and normalization checks.
inline constexpr double kTolerance = 1e-9;

/// The simulated quantum machine: n logical qubits, of which the allocated
/// ones are backed by a dense amplitude array.
///
/// Free qubits are always empty, so the state factors as |0...0>_free times
/// the state of the rest. The dense array therefore only spans qubits
/// 0..k-1 where k-1 is the highest allocated index; qubits above it are
/// implicitly |0>. Basis index bit q is qubit q.
class MachineState final : public GateSink, public QubitAllocator {
public:
    static constexpr int kMaxTotalQubits = 63;
    static constexpr int kDefaultActiveLimit = 24;

    explicit MachineState(int total_qubits, std::uint64_t seed = 0, int active_limit = kDefaultActiveLimit);

    int total_qubits() const { return total_; }
    int allocated_count() const;
    int free_count() const { return total_ - allocated_count(); }
    bool is_allocated(Qubit q) const;
    std::vector<Qubit> allocated_qubits() const;

    /// Lowest free indices first. Fresh qubits are |0>.
    RegisterMap allocate_register(int count) override;
    /// Returns the qubits to the pool; they must be empty.
    void free_register(const RegisterMap& reg);
    /// Returns the qubits to the pool without the emptiness requirement.
    void release_register(const RegisterMap& reg) override;

    void apply_primitive(const PrimitiveGate& gate);
    void apply_tape(const GateTape& tape);
    /// Applies gates; emptiness checks throw NotEmpty when checks are enabled.
    void emit(const TapeOp& op) override;

    std::uint64_t measure_register(const RegisterMap& reg);
    /// Whole machine back to |0...0>; allocation is unchanged.
    void reset_state();

    bool is_empty_register(const RegisterMap& reg) const;
    bool is_empty_qubits(const std::vector<Qubit>& qubits) const;

    Amplitude amplitude(std::uint64_t basis) const;
    int active_qubits() const { return active_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    /// Overwrites the active span. The caller supplies a normalized vector.
    void set_amplitudes(std::span<const Amplitude> amps);
    void set_basis_state(std::uint64_t basis);
    double norm_squared() const;

    double random_uniform();
    void reseed(std::uint64_t seed) { rng_.seed(seed); }

    bool checks_enabled() const { return checks_; }
    void set_checks_enabled(bool on) { checks_ = on; }

    /// Bumped by every gate, measurement and reset.
    std::uint64_t mutation_count() const { return mutations_; }

    /// "STATE: a / n qubits allocated, f / n qubits free" plus the term line
    /// over all n qubits.
    std::string format_dump() const;
    /// Nonzero terms joined by " + ". With `allocated_only` the kets list
    /// only the allocated qubits, otherwise all n.
    std::string format_terms(bool allocated_only) const;

private:
    void require_allocated(Qubit q, const char* role) const;
    void grow_to(int active);
    void shrink();

    int total_;
    int active_limit_;
    int active_ = 0;
    std::vector<bool> allocated_;
    std::vector<Amplitude> amps_;
    std::mt19937_64 rng_;
    bool checks_ = true;
    std::uint64_t mutations_ = 0;
};

/// Six significant digits, trailing zeros trimmed; complex values as re+imi.
std::string format_coefficient(Amplitude c);

}  // namespace qclite
