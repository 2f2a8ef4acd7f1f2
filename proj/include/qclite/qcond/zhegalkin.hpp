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
#include <set>
#include <string>
#include <vector>

#include "qclite/machine/gate.hpp"
#include "qclite/qcond/cond_expr.hpp"

namespace qclite {

/// Sorted, duplicate-free qubit set. The empty monomial is the constant 1.
using Monomial = std::vector<Qubit>;

/// Canonical order: by size, then lexicographic.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

/// XOR of AND-monomials over GF(2), i.e. the exclusive disjunctive normal
/// form of a boolean function of qubits.
class ZhegalkinPoly {
public:
    static ZhegalkinPoly zero() { return {}; }
    static ZhegalkinPoly one();
    static ZhegalkinPoly variable(Qubit q);

    bool constant() const;
    /// The non-constant monomials in canonical order.
    std::vector<Monomial> monomials() const;
    const std::set<Monomial, MonomialOrder>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    ZhegalkinPoly operator^(const ZhegalkinPoly& other) const;
    ZhegalkinPoly operator*(const ZhegalkinPoly& other) const;
    ZhegalkinPoly negated() const { return *this ^ one(); }

    bool evaluate(std::uint64_t basis) const;
    std::string to_string() const;

    friend bool operator==(const ZhegalkinPoly&, const ZhegalkinPoly&) = default;

private:
    void toggle(const Monomial& m);

    std::set<Monomial, MonomialOrder> terms_;
};

/// and -> product, xor -> sum, not x -> 1 + x, a or b -> a + b + ab.
ZhegalkinPoly to_xdnf(const CondExpr& cond);

}  // namespace qclite
