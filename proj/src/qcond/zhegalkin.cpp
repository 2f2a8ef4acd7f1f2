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

#include "qclite/qcond/zhegalkin.hpp"

#include <algorithm>

namespace qclite {

ZhegalkinPoly ZhegalkinPoly::one() {
    ZhegalkinPoly p;
    p.terms_.insert(Monomial{});
    return p;
}

ZhegalkinPoly ZhegalkinPoly::variable(Qubit q) {
    ZhegalkinPoly p;
    p.terms_.insert(Monomial{q});
    return p;
}

bool ZhegalkinPoly::constant() const {
    return terms_.count(Monomial{}) != 0;
}

std::vector<Monomial> ZhegalkinPoly::monomials() const {
    std::vector<Monomial> out;
    for (const auto& m : terms_)
        if (!m.empty())
            out.push_back(m);
    return out;
}

bool ZhegalkinPoly::is_one() const {
    return terms_.size() == 1 && constant();
}

void ZhegalkinPoly::toggle(const Monomial& m) {
    auto it = terms_.find(m);
    if (it != terms_.end())
        terms_.erase(it);
    else
        terms_.insert(m);
}

ZhegalkinPoly ZhegalkinPoly::operator^(const ZhegalkinPoly& other) const {
    ZhegalkinPoly out = *this;
    for (const auto& m : other.terms_)
        out.toggle(m);
    return out;
}

ZhegalkinPoly ZhegalkinPoly::operator*(const ZhegalkinPoly& other) const {
    ZhegalkinPoly out;
    for (const auto& a : terms_) {
        for (const auto& b : other.terms_) {
            Monomial m;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
            out.toggle(m);
        }
    }
    return out;
}

bool ZhegalkinPoly::evaluate(std::uint64_t basis) const {
    bool acc = false;
    for (const auto& m : terms_) {
        bool term = true;
        for (Qubit q : m)
            term = term && ((basis >> q) & 1ULL);
        acc = acc != term;
    }
    return acc;
}

std::string ZhegalkinPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& m : terms_) {
        if (!out.empty())
            out += " + ";
        if (m.empty()) {
            out += "1";
            continue;
        }
        for (std::size_t i = 0; i < m.size(); ++i)
            out += (i ? "*q" : "q") + std::to_string(m[i]);
    }
    return out;
}

ZhegalkinPoly to_xdnf(const CondExpr& cond) {
    using Kind = CondExpr::Kind;
    switch (cond.kind()) {
        case Kind::Const: return cond.value() ? ZhegalkinPoly::one() : ZhegalkinPoly::zero();
        case Kind::Qubit: return ZhegalkinPoly::variable(cond.qubit_index());
        case Kind::Not: return to_xdnf(cond.operands()[0]).negated();
        case Kind::And: return to_xdnf(cond.operands()[0]) * to_xdnf(cond.operands()[1]);
        case Kind::Xor: return to_xdnf(cond.operands()[0]) ^ to_xdnf(cond.operands()[1]);
        case Kind::Or: {
            const auto a = to_xdnf(cond.operands()[0]);
            const auto b = to_xdnf(cond.operands()[1]);
            return a ^ b ^ (a * b);
        }
    }
    return ZhegalkinPoly::zero();
}

}  // namespace qclite
