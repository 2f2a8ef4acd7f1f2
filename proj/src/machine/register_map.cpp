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

#include "qclite/machine/register_map.hpp"

#include <algorithm>
#include <set>

#include "qclite/error.hpp"

namespace qclite {

RegisterMap::RegisterMap(std::initializer_list<Qubit> qubits) : RegisterMap(std::vector<Qubit>(qubits)) {}

RegisterMap::RegisterMap(std::vector<Qubit> qubits) : qubits_(std::move(qubits)) {
    std::set<Qubit> seen;
    for (Qubit q : qubits_) {
        if (q < 0 || q >= 64)
            throw Error(ErrorCode::InvalidArgument, "qubit index " + std::to_string(q) + " out of range");
        if (!seen.insert(q).second)
            throw Error(ErrorCode::Overlap, "qubit " + std::to_string(q) + " appears twice in register");
    }
}

RegisterMap RegisterMap::index(std::int64_t position) const {
    if (position < 0 || position >= static_cast<std::int64_t>(size()))
        throw Error(ErrorCode::OutOfBounds, "qubit index " + std::to_string(position) +
                                                " outside register of length " + std::to_string(size()));
    return RegisterMap({qubits_[static_cast<std::size_t>(position)]});
}

RegisterMap RegisterMap::slice(std::int64_t first, std::int64_t last) const {
    const auto n = static_cast<std::int64_t>(size());
    if (first < 0 || last >= n || first > last)
        throw Error(ErrorCode::OutOfBounds, "subregister [" + std::to_string(first) + ":" + std::to_string(last) +
                                                "] outside register of length " + std::to_string(size()));
    return RegisterMap(std::vector<Qubit>(qubits_.begin() + first, qubits_.begin() + last + 1));
}

RegisterMap RegisterMap::concat(const RegisterMap& other) const {
    if (overlaps(other))
        throw Error(ErrorCode::Overlap, "concatenated registers " + to_string() + " and " + other.to_string() +
                                            " share qubits");
    std::vector<Qubit> joined = qubits_;
    joined.insert(joined.end(), other.qubits_.begin(), other.qubits_.end());
    return RegisterMap(std::move(joined));
}

bool RegisterMap::overlaps(const RegisterMap& other) const {
    return (mask() & other.mask()) != 0;
}

std::uint64_t RegisterMap::extract(std::uint64_t basis) const {
    std::uint64_t value = 0;
    for (std::size_t k = 0; k < qubits_.size(); ++k)
        value |= ((basis >> qubits_[k]) & 1ULL) << k;
    return value;
}

std::uint64_t RegisterMap::mask() const {
    std::uint64_t m = 0;
    for (Qubit q : qubits_)
        m |= 1ULL << q;
    return m;
}

std::string RegisterMap::to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < qubits_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(qubits_[i]);
    }
    return out + ">";
}

}  // namespace qclite
