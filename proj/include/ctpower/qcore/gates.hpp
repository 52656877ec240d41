// Copyright 2026 The ctpower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "ctpower/qcore/state.hpp"

namespace ctpower {

enum class Axis { X, Y, Z };

inline constexpr std::array<Axis, 3> kAxes = {Axis::X, Axis::Y, Axis::Z};

inline constexpr std::string_view to_string(Axis k) {
    switch (k) {
        case Axis::X:
            return "x";
        case Axis::Y:
            return "y";
        case Axis::Z:
            return "z";
    }
    return "?";
}

/// 2x2 complex matrix stored row-major: {m00, m01, m10, m11}.
struct SingleQubitGate {
    std::array<Amplitude, 4> m{};

    Amplitude operator()(std::size_t r, std::size_t c) const { return m[2 * r + c]; }

    friend SingleQubitGate operator*(const SingleQubitGate& a, const SingleQubitGate& b) {
        SingleQubitGate out;
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) out.m[2 * r + c] = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
        }
        return out;
    }

    SingleQubitGate adjoint() const { return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}}; }

    bool approx_equal(const SingleQubitGate& o, double tol = kExactTol) const {
        for (std::size_t i = 0; i < 4; ++i) {
            if (std::abs(m[i] - o.m[i]) > tol) return false;
        }
        return true;
    }

    bool is_unitary(double tol = kExactTol) const;
    bool is_hermitian(double tol = kExactTol) const { return approx_equal(adjoint(), tol); }
};

inline const SingleQubitGate kIdentity{{1.0, 0.0, 0.0, 1.0}};
inline const SingleQubitGate kSigmaX{{0.0, 1.0, 1.0, 0.0}};
inline const SingleQubitGate kSigmaY{{0.0, Amplitude(0.0, -1.0), Amplitude(0.0, 1.0), 0.0}};
inline const SingleQubitGate kSigmaZ{{1.0, 0.0, 0.0, -1.0}};
/// Real form [[0,-1],[1,0]] = -i*sigma_y. Gives the same |<phi|s|phi>|^2 as sigma_y
/// and builds the singlet (|01>-|10>)/sqrt2 from |Phi+> with no extra phase.
inline const SingleQubitGate kRealSigmaY{{0.0, -1.0, 1.0, 0.0}};

inline bool SingleQubitGate::is_unitary(double tol) const { return (adjoint() * *this).approx_equal(kIdentity, tol); }

/// Hermitian Pauli matrix.
inline const SingleQubitGate& pauli(Axis k) {
    switch (k) {
        case Axis::X:
            return kSigmaX;
        case Axis::Y:
            return kSigmaY;
        case Axis::Z:
            break;
    }
    return kSigmaZ;
}

/// Pauli with sigma_y replaced by its real form.
inline const SingleQubitGate& real_pauli(Axis k) { return k == Axis::Y ? kRealSigmaY : pauli(k); }

/// Applies `g` to qubit `target`, identity on the rest.
inline PureState apply_gate(const SingleQubitGate& g, std::size_t target, const PureState& s) {
    const std::size_t n = s.num_qubits();
    if (target >= n) throw IndexError("gate target out of range");
    const std::size_t mask = qubit_mask(target, n);
    std::vector<Amplitude> out(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (i & mask) continue;
        const Amplitude a0 = s[i];
        const Amplitude a1 = s[i | mask];
        out[i] = g(0, 0) * a0 + g(0, 1) * a1;
        out[i | mask] = g(1, 0) * a0 + g(1, 1) * a1;
    }
    return PureState::normalized(std::move(out));
}

/// Applies one gate per qubit: gates[q] acts on qubit q.
inline PureState apply_local(std::span<const SingleQubitGate> gates, const PureState& s) {
    if (gates.size() != s.num_qubits()) throw DimensionError("need one gate per qubit");
    PureState out = s;
    for (std::size_t q = 0; q < gates.size(); ++q) out = apply_gate(gates[q], q, out);
    return out;
}

/// <phi|g|phi> for a single-qubit state.
inline Amplitude expectation(const SingleQubitGate& g, const PureState& phi) {
    if (phi.num_qubits() != 1) throw DimensionError("expectation needs a single-qubit state");
    Amplitude s = 0.0;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) s += std::conj(phi[r]) * g(r, c) * phi[c];
    }
    return s;
}

}  // namespace ctpower
