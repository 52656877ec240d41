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
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ctpower/qcore/state.hpp"

namespace ctpower {

/// Square complex matrix on an n-qubit space, row-major. No invariants beyond shape.
class QubitOperator {
   public:
    explicit QubitOperator(std::size_t num_qubits) : num_qubits_(num_qubits), data_(dim() * dim()) {
        if (num_qubits < 1 || num_qubits > kMaxQubits) throw DimensionError("qubit count must be in 1..4");
    }

    QubitOperator(std::size_t num_qubits, std::vector<Amplitude> data) : num_qubits_(num_qubits), data_(std::move(data)) {
        if (num_qubits < 1 || num_qubits > kMaxQubits) throw DimensionError("qubit count must be in 1..4");
        if (data_.size() != dim() * dim()) throw DimensionError("matrix size does not match qubit count");
    }

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return std::size_t{1} << num_qubits_; }

    Amplitude& operator()(std::size_t r, std::size_t c) { return data_[r * dim() + c]; }
    const Amplitude& operator()(std::size_t r, std::size_t c) const { return data_[r * dim() + c]; }
    std::span<const Amplitude> data() const { return data_; }

    Amplitude trace() const {
        Amplitude t = 0.0;
        for (std::size_t i = 0; i < dim(); ++i) t += (*this)(i, i);
        return t;
    }

    double hermiticity_error() const {
        double e = 0.0;
        for (std::size_t r = 0; r < dim(); ++r) {
            for (std::size_t c = r; c < dim(); ++c) e = std::max(e, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
        return e;
    }

    /// Smallest eigenvalue of the Hermitian part.
    double min_eigenvalue() const {
        const auto d = static_cast<Eigen::Index>(dim());
        Eigen::MatrixXcd m(d, d);
        for (Eigen::Index r = 0; r < d; ++r) {
            for (Eigen::Index c = 0; c < d; ++c) {
                m(r, c) = 0.5 * ((*this)(r, c) + std::conj((*this)(c, r)));
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff();
    }

    QubitOperator& operator+=(const QubitOperator& o) {
        if (o.num_qubits_ != num_qubits_) throw DimensionError("operator sizes differ");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }

    QubitOperator& operator*=(Amplitude s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend QubitOperator operator+(QubitOperator a, const QubitOperator& b) { return a += b; }
    friend QubitOperator operator*(Amplitude s, QubitOperator a) { return a *= s; }

    double max_abs_diff(const QubitOperator& o) const {
        if (o.num_qubits_ != num_qubits_) throw DimensionError("operator sizes differ");
        double m = 0.0;
        for (std::size_t i = 0; i < data_.size(); ++i) m = std::max(m, std::abs(data_[i] - o.data_[i]));
        return m;
    }

   private:
    std::size_t num_qubits_;
    std::vector<Amplitude> data_;
};

/// Partial trace over `discard` of an arbitrary operator.
///
/// `discard` must name a nonempty strict subset of the qubits. The remaining
/// qubits keep their relative order.
inline QubitOperator partial_trace(const QubitOperator& op, std::span<const std::size_t> discard) {
    const std::size_t n = op.num_qubits();
    std::vector<std::size_t> gone(discard.begin(), discard.end());
    std::sort(gone.begin(), gone.end());
    gone.erase(std::unique(gone.begin(), gone.end()), gone.end());
    if (gone.empty()) throw IndexError("partial trace needs at least one discarded qubit");
    if (gone.back() >= n) throw IndexError("discarded qubit out of range");
    if (gone.size() >= n) throw IndexError("partial trace cannot discard every qubit");

    std::vector<std::size_t> keep;
    for (std::size_t q = 0; q < n; ++q) {
        if (!std::binary_search(gone.begin(), gone.end(), q)) keep.push_back(q);
    }

    const auto embed = [n](std::span<const std::size_t> qs, std::size_t bits) {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < qs.size(); ++j) {
            if (qubit_bit(bits, j, qs.size())) idx |= qubit_mask(qs[j], n);
        }
        return idx;
    };

    QubitOperator out(keep.size());
    const std::size_t env = std::size_t{1} << gone.size();
    for (std::size_t r = 0; r < out.dim(); ++r) {
        const std::size_t rb = embed(keep, r);
        for (std::size_t c = 0; c < out.dim(); ++c) {
            const std::size_t cb = embed(keep, c);
            Amplitude acc = 0.0;
            for (std::size_t e = 0; e < env; ++e) {
                const std::size_t eb = embed(gone, e);
                acc += op(rb | eb, cb | eb);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

/// Hermitian, positive semidefinite, unit-trace operator.
class DensityOperator {
   public:
    /// Validates the density-operator invariants: Hermitian and unit trace
    /// within `tol`, eigenvalues no lower than -1e-10.
    static DensityOperator from_operator(QubitOperator op, double tol = kInputTol) {
        if (op.hermiticity_error() > tol) throw NormalizationError("operator is not Hermitian");
        if (std::abs(op.trace() - Amplitude(1.0)) > tol) throw NormalizationError("trace differs from 1");
        if (op.min_eigenvalue() < -1e-10) throw NormalizationError("operator has a negative eigenvalue");
        return DensityOperator(std::move(op));
    }

    std::size_t num_qubits() const { return op_.num_qubits(); }
    std::size_t dim() const { return op_.dim(); }
    const Amplitude& operator()(std::size_t r, std::size_t c) const { return op_(r, c); }
    const QubitOperator& as_operator() const { return op_; }

    double max_abs_diff(const DensityOperator& o) const { return op_.max_abs_diff(o.op_); }

   private:
    explicit DensityOperator(QubitOperator op) : op_(std::move(op)) {}

    friend DensityOperator to_density(const PureState&);
    friend DensityOperator partial_trace(const DensityOperator&, std::span<const std::size_t>);
    friend DensityOperator mix(std::span<const double>, std::span<const DensityOperator>);

    QubitOperator op_;
};

/// |s><s|
inline DensityOperator to_density(const PureState& s) {
    QubitOperator op(s.num_qubits());
    for (std::size_t r = 0; r < s.dim(); ++r) {
        for (std::size_t c = 0; c < s.dim(); ++c) op(r, c) = s[r] * std::conj(s[c]);
    }
    return DensityOperator(std::move(op));
}

inline DensityOperator partial_trace(const DensityOperator& rho, std::span<const std::size_t> discard) {
    return DensityOperator(partial_trace(rho.op_, discard));
}

inline DensityOperator partial_trace(const DensityOperator& rho, std::initializer_list<std::size_t> discard) {
    return partial_trace(rho, std::span<const std::size_t>(discard.begin(), discard.size()));
}

/// Convex combination sum_i w_i rho_i. Weights must be nonnegative and sum to 1.
inline DensityOperator mix(std::span<const double> weights, std::span<const DensityOperator> parts) {
    if (weights.size() != parts.size() || parts.empty()) throw DimensionError("mixture needs one weight per part");
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw RangeError("negative mixture weight");
        total += w;
    }
    if (std::abs(total - 1.0) > kInputTol) throw NormalizationError("mixture weights do not sum to 1");
    QubitOperator acc(parts.front().num_qubits());
    for (std::size_t i = 0; i < parts.size(); ++i) acc += Amplitude(weights[i] / total) * parts[i].op_;
    return DensityOperator(std::move(acc));
}

/// <phi|rho|phi>, clamped to [0, 1].
inline double fidelity_with_pure(const DensityOperator& rho, const PureState& phi) {
    if (rho.dim() != phi.dim()) throw DimensionError("state and operator dimensions differ");
    Amplitude s = 0.0;
    for (std::size_t r = 0; r < phi.dim(); ++r) {
        for (std::size_t c = 0; c < phi.dim(); ++c) s += std::conj(phi[r]) * rho(r, c) * phi[c];
    }
    return std::clamp(s.real(), 0.0, 1.0);
}

}  // namespace ctpower
