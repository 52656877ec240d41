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
#include <optional>
#include <vector>

#include "ctpower/analysis/power.hpp"

namespace ctpower {

/// Equatorial family an input belongs to; empty for arbitrary inputs.
inline std::optional<EquatorialFamily> family_of(const InputFamily& f) {
    const auto& v = f.variant();
    if (std::holds_alternative<XZInput>(v)) return EquatorialFamily::XZ;
    if (std::holds_alternative<XYInput>(v)) return EquatorialFamily::XY;
    if (std::holds_alternative<YZInput>(v)) return EquatorialFamily::YZ;
    return std::nullopt;
}

/// a^2 + b^2 |<phi_j|sigma_k|phi_j>|^2 for the channel built for family
/// `channel_family` teleporting an input from another family.
inline double mismatch_ncf_closed(double a, double b, EquatorialFamily channel_family, const InputFamily& input) {
    const auto input_family = family_of(input);
    if (!input_family) throw RangeError("mismatch analysis needs an equatorial input");
    if (*input_family == channel_family) throw MatchedFamiliesError("channel and input families coincide");
    return ncf_theta_closed(a, b, matched_axis(channel_family), input);
}

struct MismatchRow {
    EquatorialFamily channel_family = EquatorialFamily::XZ;
    EquatorialFamily input_family = EquatorialFamily::XZ;
    bool matched = false;
    /// Circle average of the simulated non-conditioned fidelity.
    double f_bar = 0.0;
    /// Circle average of a^2 + b^2 |<sigma_k>|^2.
    double f_bar_closed = 0.0;
    double c_bar = 0.0;
};

/// Compares the largest mismatched average control power at a = b against
/// the classical value 1/3.
struct ClassicalLimitCheck {
    double max_mismatched_c_bar = 0.0;
    double expected = kClassicalPowerBound;
    bool agrees = false;
};

struct MismatchReport {
    double a = 0.0;
    double b = 0.0;
    /// Six mismatched (channel, input) pairs followed by the three matched ones.
    std::vector<MismatchRow> rows;
    ClassicalLimitCheck equal_weight_check;
};

/// Averages for Theta channel `channel_family` over input circle `input_family`.
inline MismatchRow mismatch_row(double a, double b, EquatorialFamily channel_family, EquatorialFamily input_family,
                                const QuadratureOptions& opt = {}) {
    const ChannelSpec spec = ChannelSpec::theta(a, b, matched_axis(channel_family), PauliConvention::Real);
    const AverageDomain domain = FamilyDomain{input_family};
    MismatchRow row{channel_family, input_family, channel_family == input_family};
    row.f_bar = avg_fidelity_numeric(spec, domain, Quadrature{opt}).mean;
    const Axis k = matched_axis(channel_family);
    row.f_bar_closed = detail::average_over(domain, Quadrature{opt}, [&](const PureState& in) {
                           const double e = std::abs(expectation(pauli(k), in));
                           return a * a + b * b * e * e;
                       }).mean;
    row.c_bar = control_power(std::clamp(row.f_bar, 0.0, 1.0));
    return row;
}

inline ClassicalLimitCheck classical_limit_check(const QuadratureOptions& opt = {}) {
    const double h = 1.0 / std::sqrt(2.0);
    ClassicalLimitCheck out;
    for (auto i : kEquatorialFamilies) {
        for (auto j : kEquatorialFamilies) {
            if (i == j) continue;
            out.max_mismatched_c_bar = std::max(out.max_mismatched_c_bar, mismatch_row(h, h, i, j, opt).c_bar);
        }
    }
    out.agrees = std::abs(out.max_mismatched_c_bar - out.expected) <= kBoundTol;
    return out;
}

inline MismatchReport mismatch_report(double a, double b, const QuadratureOptions& opt = {}) {
    if (!std::isfinite(a) || !std::isfinite(b) || std::abs(a * a + b * b - 1.0) > kInputTol) {
        throw NormalizationError("a^2 + b^2 must equal 1");
    }
    MismatchReport rep;
    rep.a = a;
    rep.b = b;
    for (auto i : kEquatorialFamilies) {
        for (auto j : kEquatorialFamilies) {
            if (i != j) rep.rows.push_back(mismatch_row(a, b, i, j, opt));
        }
    }
    for (auto i : kEquatorialFamilies) rep.rows.push_back(mismatch_row(a, b, i, i, opt));
    rep.equal_weight_check = classical_limit_check(opt);
    return rep;
}

}  // namespace ctpower
