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

// Reference oracles for tests. Everything here is written from the gate and
// language definitions directly and shares no code with the library
// beyond its data types.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "qclite/machine/gate.hpp"

namespace oracle {

using cd = std::complex<double>;
using Vec = std::vector<cd>;
using Mat = std::vector<Vec>;  // m[row][col]

inline constexpr double kTol = 1e-9;

inline Mat identity(std::size_t n) {
    Mat m(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1.0;
    return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
    const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    Mat c(n, Vec(p));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == cd{})
                continue;
            for (std::size_t j = 0; j < p; ++j)
                c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

inline Mat dagger(const Mat& a) {
    Mat c(a.empty() ? 0 : a[0].size(), Vec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            c[j][i] = std::conj(a[i][j]);
    return c;
}

inline double max_diff(const Mat& a, const Mat& b) {
    if (a.size() != b.size())
        return INFINITY;
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size())
            return INFINITY;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            d = std::max(d, std::abs(a[i][j] - b[i][j]));
    }
    return d;
}

inline bool is_unitary(const Mat& m) {
    return max_diff(mul(dagger(m), m), identity(m.size())) < kTol;
}

/// Exactly one entry of magnitude 1 per row and column, all others 0.
inline bool is_permutation(const Mat& m) {
    const std::size_t n = m.size();
    std::vector<int> col_hits(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int row_hits = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(m[i][j] - cd{1.0}) < kTol) {
                ++row_hits;
                ++col_hits[j];
            } else if (std::abs(m[i][j]) > kTol) {
                return false;
            }
        }
        if (row_hits != 1)
            return false;
    }
    for (int c : col_hits)
        if (c != 1)
            return false;
    return true;
}

/// Permutation matrix sending basis |i> to |f(i)>.
template <class F>
Mat permutation_matrix(std::size_t n, F f) {
    Mat m(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        m[f(i)][i] = 1.0;
    return m;
}

/// Discrete Fourier matrix, entries w^(jk)/sqrt(N) with w = exp(2 pi i / N).
inline Mat fourier(std::size_t n) {
    Mat m(n, Vec(n));
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            m[j][k] = std::polar(s, 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n));
    return m;
}

/// diag(I, U): U acts only where the enable bit (above the x bits) is 1.
inline Mat block_conditional(const Mat& u) {
    const std::size_t n = u.size();
    Mat m(2 * n, Vec(2 * n));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[n + i][n + j] = u[i][j];
    return m;
}

// 2x2 gate matrices, [row][col].
inline void gate_matrix(const qclite::PrimitiveGate& g, cd m[2][2]) {
    using qclite::GateKind;
    const double r = 1.0 / std::sqrt(2.0);
    switch (g.kind) {
        case GateKind::X: m[0][0] = 0; m[0][1] = 1; m[1][0] = 1; m[1][1] = 0; break;
        case GateKind::H: m[0][0] = r; m[0][1] = r; m[1][0] = r; m[1][1] = -r; break;
        case GateKind::Rot: {
            const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
            m[0][0] = c; m[0][1] = s; m[1][0] = -s; m[1][1] = c;
            break;
        }
        case GateKind::Phase: break;
    }
}

inline bool controls_set(std::uint64_t basis, const std::vector<int>& controls) {
    for (int c : controls)
        if (!((basis >> c) & 1u))
            return false;
    return true;
}

inline void apply_gate(Vec& v, const qclite::PrimitiveGate& g) {
    if (g.kind == qclite::GateKind::Phase) {
        const cd f = std::polar(1.0, g.angle);
        for (std::uint64_t b = 0; b < v.size(); ++b)
            if (controls_set(b, g.controls))
                v[b] *= f;
        return;
    }
    cd m[2][2];
    gate_matrix(g, m);
    const std::uint64_t bit = std::uint64_t{1} << *g.target;
    for (std::uint64_t b = 0; b < v.size(); ++b) {
        if ((b & bit) || !controls_set(b, g.controls))
            continue;
        const cd a0 = v[b], a1 = v[b | bit];
        v[b] = m[0][0] * a0 + m[0][1] * a1;
        v[b | bit] = m[1][0] * a0 + m[1][1] * a1;
    }
}

inline bool qubits_empty(const Vec& v, const std::vector<int>& qubits) {
    std::uint64_t mask = 0;
    for (int q : qubits)
        mask |= std::uint64_t{1} << q;
    for (std::uint64_t b = 0; b < v.size(); ++b)
        if ((b & mask) && std::abs(v[b]) > kTol)
            return false;
    return true;
}

/// Applies every gate of a tape; returns false if any emptiness check fails.
inline bool apply_tape(Vec& v, const qclite::GateTape& tape, std::size_t first = 0,
                       std::size_t last = static_cast<std::size_t>(-1)) {
    const auto& ops = tape.ops();
    bool ok = true;
    for (std::size_t i = first; i < ops.size() && i < last; ++i) {
        if (const auto* g = std::get_if<qclite::PrimitiveGate>(&ops[i]))
            apply_gate(v, *g);
        else if (!qubits_empty(v, std::get<qclite::EmptinessCheck>(ops[i]).qubits))
            ok = false;
    }
    return ok;
}

/// Highest qubit index used by the tape, plus one.
inline int tape_width(const qclite::GateTape& tape) {
    int w = 0;
    for (const auto& op : tape) {
        if (const auto* g = std::get_if<qclite::PrimitiveGate>(&op)) {
            if (g->target)
                w = std::max(w, *g->target + 1);
            for (int c : g->controls)
                w = std::max(w, c + 1);
        } else {
            for (int q : std::get<qclite::EmptinessCheck>(op).qubits)
                w = std::max(w, q + 1);
        }
    }
    return w;
}

struct TapeMatrix {
    Mat m;
    bool ancillas_clean = true;  // qubits >= n_args return to |0>
    bool checks_passed = true;
};

/// Matrix of the tape restricted to qubits 0..n_args-1, with every other
/// qubit the tape touches starting in |0>.
inline TapeMatrix tape_matrix(const qclite::GateTape& tape, int n_args) {
    const int width = std::max(tape_width(tape), n_args);
    const std::size_t dim = std::size_t{1} << n_args;
    const std::uint64_t arg_mask = dim - 1;
    TapeMatrix out;
    out.m.assign(dim, Vec(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        Vec v(std::size_t{1} << width);
        v[col] = 1.0;
        if (!apply_tape(v, tape))
            out.checks_passed = false;
        for (std::uint64_t b = 0; b < v.size(); ++b) {
            if (b & ~arg_mask) {
                if (std::abs(v[b]) > kTol)
                    out.ancillas_clean = false;
                continue;
            }
            out.m[b][col] = v[b];
        }
    }
    return out;
}

}  // namespace oracle
