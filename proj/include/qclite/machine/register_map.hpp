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

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "qclite/machine/gate.hpp"

namespace qclite {

/// Ordered sequence of mutually distinct qubit positions. Position 0 is the
/// register's least significant qubit. The reordering onto machine qubits is
/// implicit in the index mapping.
class RegisterMap {
public:
    RegisterMap() = default;
    RegisterMap(std::initializer_list<Qubit> qubits);
    explicit RegisterMap(std::vector<Qubit> qubits);

    std::size_t size() const { return qubits_.size(); }
    bool empty() const { return qubits_.empty(); }
    Qubit operator[](std::size_t position) const { return qubits_[position]; }
    const std::vector<Qubit>& qubits() const { return qubits_; }

    auto begin() const { return qubits_.begin(); }
    auto end() const { return qubits_.end(); }

    /// q[i]
    RegisterMap index(std::int64_t position) const;
    /// q[a:b], inclusive on both ends.
    RegisterMap slice(std::int64_t first, std::int64_t last) const;
    /// q & p; operands must be disjoint.
    RegisterMap concat(const RegisterMap& other) const;

    bool overlaps(const RegisterMap& other) const;

    /// Value encoded by this register's bits within a machine basis index.
    std::uint64_t extract(std::uint64_t basis) const;
    /// Machine basis mask covering this register's qubits.
    std::uint64_t mask() const;

    std::string to_string() const;

    friend bool operator==(const RegisterMap&, const RegisterMap&) = default;

private:
    std::vector<Qubit> qubits_;
};

/// Source of fresh qubits. Released qubits must be empty by the time the
/// gates already emitted on them have been applied.
class QubitAllocator {
public:
    virtual ~QubitAllocator() = default;
    virtual RegisterMap allocate_register(int count) = 0;
    virtual void release_register(const RegisterMap& reg) = 0;
};

}  // namespace qclite
