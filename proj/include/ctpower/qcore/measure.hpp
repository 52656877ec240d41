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

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ctpower/qcore/state.hpp"

namespace ctpower {

/// Below this probability a projection is reported as impossible.
inline constexpr double kVanishingProbability = 1e-24;

/// Outcome of projecting part of a register onto a fixed state.
///
/// `post` holds the renormalized state of the unmeasured qubits, in their
/// original relative order. It is empty when the projection vanishes, in
/// which case `probability` is exactly 0.
struct Projection {
    double probability = 0.0;
    std::optional<PureState> post;

    bool possible() const { return post.has_value(); }
};

/// Projects `qubits` of `s` onto `onto`, whose qubit j corresponds to qubits[j].
inline Projection project_qubits(const PureState& s, std::span<const std::size_t> qubits, const PureState& onto) {
    const std::size_t n = s.num_qubits();
    const std::size_t k = qubits.size();
    if (onto.num_qubits() != k) throw DimensionError("projector size does not match the measured qubit count");
    if (k >= n) throw DimensionError("projection must leave at least one qubit unmeasured");
    for (std::size_t j = 0; j < k; ++j) {
        if (qubits[j] >= n) throw IndexError("measured qubit out of range");
        for (std::size_t i = 0; i < j; ++i) {
            if (qubits[i] == qubits[j]) throw IndexError("measured qubits must be distinct");
        }
    }

    std::vector<std::size_t> rest;
    for (std::size_t q = 0; q < n; ++q) {
        if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) rest.push_back(q);
    }
    const std::size_t m = rest.size();

    std::vector<Amplitude> out(std::size_t{1} << m);
    for (std::size_t r = 0; r < out.size(); ++r) {
        std::size_t base = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (qubit_bit(r, j, m)) base |= qubit_mask(rest[j], n);
        }
        Amplitude acc = 0.0;
        for (std::size_t p = 0; p < onto.dim(); ++p) {
            std::size_t idx = base;
            for (std::size_t j = 0; j < k; ++j) {
                if (qubit_bit(p, j, k)) idx |= qubit_mask(qubits[j], n);
            }
            acc += std::conj(onto[p]) * s[idx];
        }
        out[r] = acc;
    }

    double prob = 0.0;
    for (const auto& a : out) prob += std::norm(a);
    if (prob < kVanishingProbability) return {0.0, std::nullopt};
    return {prob, PureState::normalized(std::move(out))};
}

inline Projection project_single_qubit(const PureState& s, std::size_t qi, const PureState& onto) {
    const std::array<std::size_t, 1> q{qi};
    return project_qubits(s, q, onto);
}

inline Projection project_two_qubit(const PureState& s, std::size_t qi, std::size_t qj, const PureState& onto) {
    const std::array<std::size_t, 2> q{qi, qj};
    return project_qubits(s, q, onto);
}

}  // namespace ctpower
