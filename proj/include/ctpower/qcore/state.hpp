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

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ctpower/errors.hpp"

namespace ctpower {

using Amplitude = std::complex<double>;

/// Tolerance for checks on values produced by exact arithmetic.
inline constexpr double kExactTol = 1e-12;
/// Tolerance for validating caller-supplied amplitudes and parameters.
inline constexpr double kInputTol = 1e-10;
inline constexpr std::size_t kMaxQubits = 4;

inline bool is_finite(Amplitude a) { return std::isfinite(a.real()) && std::isfinite(a.imag()); }

/// Bit of `index` that holds qubit `q` in an `n`-qubit register.
///
/// Qubit 0 is the leftmost tensor factor, so it sits in the most significant
/// bit of the basis index: |q0 q1 ... q(n-1)>.
inline constexpr std::size_t qubit_bit(std::size_t index, std::size_t q, std::size_t n) {
    return (index >> (n - 1 - q)) & 1U;
}

inline constexpr std::size_t qubit_mask(std::size_t q, std::size_t n) { return std::size_t{1} << (n - 1 - q); }

/// Normalized state vector of 1 to 4 qubits.
class PureState {
   public:
    /// Builds a state from raw amplitudes. The length must be 2^n with
    /// 1 <= n <= 4 and the squared norm must be 1 within `tol`; the stored
    /// vector is renormalized so the norm invariant holds to rounding.
    static PureState from_amplitudes(std::vector<Amplitude> amps, double tol = kInputTol) {
        const std::size_t n = qubits_for_length(amps.size());
        double norm2 = 0.0;
        for (const auto& a : amps) {
            if (!is_finite(a)) throw NormalizationError("non-finite amplitude");
            norm2 += std::norm(a);
        }
        if (std::abs(norm2 - 1.0) > tol) {
            throw NormalizationError("squared norm " + std::to_string(norm2) + " differs from 1");
        }
        const double scale = 1.0 / std::sqrt(norm2);
        for (auto& a : amps) a *= scale;
        return PureState(n, std::move(amps));
    }

    static PureState basis(std::size_t num_qubits, std::size_t index) {
        if (num_qubits < 1 || num_qubits > kMaxQubits) throw DimensionError("qubit count must be in 1..4");
        std::vector<Amplitude> amps(std::size_t{1} << num_qubits);
        if (index >= amps.size()) throw IndexError("basis index out of range");
        amps[index] = 1.0;
        return PureState(num_qubits, std::move(amps));
    }

    /// Rescales an arbitrary nonzero vector to unit norm.
    static PureState normalized(std::vector<Amplitude> amps) {
        const std::size_t n = qubits_for_length(amps.size());
        double norm2 = 0.0;
        for (const auto& a : amps) norm2 += std::norm(a);
        if (!(norm2 > 0.0) || !std::isfinite(norm2)) throw NormalizationError("cannot normalize a zero vector");
        const double scale = 1.0 / std::sqrt(norm2);
        for (auto& a : amps) a *= scale;
        return PureState(n, std::move(amps));
    }

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const {
        double s = 0.0;
        for (const auto& a : amps_) s += std::norm(a);
        return s;
    }

    bool operator==(const PureState&) const = default;

   private:
    PureState(std::size_t n, std::vector<Amplitude> amps) : num_qubits_(n), amps_(std::move(amps)) {}

    static std::size_t qubits_for_length(std::size_t len) {
        for (std::size_t n = 1; n <= kMaxQubits; ++n) {
            if (len == (std::size_t{1} << n)) return n;
        }
        throw DimensionError("amplitude count " + std::to_string(len) + " is not 2^n for n in 1..4");
    }

    friend PureState tensor(const PureState&, const PureState&);

    std::size_t num_qubits_;
    std::vector<Amplitude> amps_;
};

/// Single-qubit state k0|0> + k1|1>.
inline PureState make_qubit(Amplitude k0, Amplitude k1) { return PureState::from_amplitudes({k0, k1}); }

/// Kronecker product; the qubits of `a` come first.
inline PureState tensor(const PureState& a, const PureState& b) {
    if (a.num_qubits() + b.num_qubits() > kMaxQubits) throw DimensionError("tensor product exceeds 4 qubits");
    std::vector<Amplitude> out;
    out.reserve(a.dim() * b.dim());
    for (const auto& x : a.amps_) {
        for (const auto& y : b.amps_) out.push_back(x * y);
    }
    return PureState(a.num_qubits() + b.num_qubits(), std::move(out));
}

/// <a|b>
inline Amplitude inner(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) throw DimensionError("inner product of states with different dimensions");
    Amplitude s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

inline bool equal_up_to_global_phase(const PureState& a, const PureState& b, double tol = kExactTol) {
    if (a.dim() != b.dim()) return false;
    return std::abs(std::abs(inner(a, b)) - 1.0) <= tol;
}

/// Largest element-wise deviation between two states of equal dimension.
inline double max_abs_diff(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) throw DimensionError("state dimensions differ");
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

/// Assembles states from unnormalized superpositions of other states.
class StateBuilder {
   public:
    explicit StateBuilder(std::size_t num_qubits) : num_qubits_(num_qubits), amps_(std::size_t{1} << num_qubits) {
        if (num_qubits < 1 || num_qubits > kMaxQubits) throw DimensionError("qubit count must be in 1..4");
    }

    StateBuilder& add(Amplitude coeff, const PureState& s) {
        if (s.num_qubits() != num_qubits_) throw DimensionError("term has the wrong qubit count");
        for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += coeff * s[i];
        return *this;
    }

    StateBuilder& add_basis(Amplitude coeff, std::size_t index) {
        if (index >= amps_.size()) throw IndexError("basis index out of range");
        amps_[index] += coeff;
        return *this;
    }

    /// Requires the accumulated vector to be normalized within `tol`.
    PureState build(double tol = kInputTol) const { return PureState::from_amplitudes(amps_, tol); }

    /// Rescales the accumulated vector to unit norm.
    PureState build_normalized() const { return PureState::normalized(amps_); }

    std::span<const Amplitude> raw() const { return amps_; }

   private:
    std::size_t num_qubits_;
    std::vector<Amplitude> amps_;
};

}  // namespace ctpower
