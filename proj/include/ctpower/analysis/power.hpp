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
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <variant>

#include "ctpower/analysis/quadrature.hpp"
#include "ctpower/analysis/rng.hpp"
#include "ctpower/channels.hpp"
#include "ctpower/protocol.hpp"

namespace ctpower {

/// Best average fidelity of a measure-and-prepare (classical) channel.
inline constexpr double kClassicalFidelity = 2.0 / 3.0;
/// Smallest control power that keeps the receiver at or below the classical fidelity.
inline constexpr double kClassicalPowerBound = 1.0 / 3.0;
/// Guessing a state at random already reaches fidelity 1/2, so C never exceeds this.
inline constexpr double kMaxControlPower = 0.5;

/// C = 1 - f.
inline double control_power(double f) {
    if (!std::isfinite(f) || f < -kExactTol || f > 1.0 + kExactTol) throw RangeError("fidelity must lie in [0, 1]");
    return std::clamp(1.0 - f, 0.0, 1.0);
}

/// Sphere average of the MS non-conditioned fidelity: 2/3 + |d|/3.
inline double avg_fidelity_ms_analytic(double d) {
    if (!std::isfinite(d) || std::abs(d) > 1.0) throw RangeError("|d| must not exceed 1");
    return 2.0 / 3.0 + std::abs(d) / 3.0;
}

/// a^2 in [1/3, 2/3], i.e. C = 1 - max(a^2, b^2) >= 1/3.
inline bool power_bound_check(double a) {
    const double a2 = a * a;
    return a2 >= 1.0 / 3.0 - kExactTol && a2 <= 2.0 / 3.0 + kExactTol;
}

enum class Measure {
    BlochSphereUniform,  // dOmega / 4pi
    GreatCircleUniform,  // d(angle) / 2pi
};

struct SphereDomain {};
struct FamilyDomain {
    EquatorialFamily family = EquatorialFamily::XZ;
};
/// Set of inputs an average runs over.
using AverageDomain = std::variant<SphereDomain, FamilyDomain>;

inline Measure natural_measure(const AverageDomain& d) {
    return std::holds_alternative<SphereDomain>(d) ? Measure::BlochSphereUniform : Measure::GreatCircleUniform;
}

struct Quadrature {
    QuadratureOptions options{};
};
struct MonteCarlo {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};
using AverageMethod = std::variant<Quadrature, MonteCarlo>;

struct AverageResult {
    double mean = 0.0;
    /// Standard error of the mean; 0 for quadrature, NaN for a single sample.
    double std_error = 0.0;
};

namespace detail {

/// Quadrature-or-sampling average of g over the domain, where g receives the input state.
template <class G>
AverageResult average_over(const AverageDomain& domain, const AverageMethod& method, G&& g) {
    using std::numbers::pi;
    if (const auto* q = std::get_if<Quadrature>(&method)) {
        if (std::holds_alternative<SphereDomain>(domain)) {
            const auto r = integrate_2d(
                [&](double theta, double phi) {
                    return std::sin(theta) * g(input_state(InputFamily::arbitrary(theta, phi)));
                },
                0.0, pi, 0.0, 2 * pi, {q->options.abs_tol * 4 * pi, q->options.max_depth});
            return {r.value / (4 * pi), 0.0};
        }
        const auto fam = std::get<FamilyDomain>(domain).family;
        const auto r = integrate([&](double t) { return g(input_state(InputFamily::equatorial(fam, t))); }, 0.0,
                                 2 * pi, {q->options.abs_tol * 2 * pi, q->options.max_depth});
        return {r.value / (2 * pi), 0.0};
    }

    const auto& mc = std::get<MonteCarlo>(method);
    if (mc.samples < 1) throw RangeError("Monte Carlo needs at least one sample");
    CounterRng rng(mc.seed, mc.stream);
    // Welford accumulation keeps the variance accurate for means near 1.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t i = 0; i < mc.samples; ++i) {
        PureState in = PureState::basis(1, 0);
        if (std::holds_alternative<SphereDomain>(domain)) {
            const double cos_theta = 1.0 - 2.0 * rng.uniform();
            const double phi = 2 * pi * rng.uniform();
            in = input_state(InputFamily::arbitrary(std::acos(std::clamp(cos_theta, -1.0, 1.0)), phi));
        } else {
            in = input_state(InputFamily::equatorial(std::get<FamilyDomain>(domain).family, 2 * pi * rng.uniform()));
        }
        const double x = g(in);
        const double delta = x - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (x - mean);
    }
    const double n = static_cast<double>(mc.samples);
    if (mc.samples == 1) return {mean, std::numeric_limits<double>::quiet_NaN()};
    return {mean, std::sqrt(m2 / (n - 1) / n)};
}

}  // namespace detail

/// Average non-conditioned fidelity of `spec` over `domain`.
///
/// `measure` must be the domain's natural measure: the uniform Bloch-sphere
/// measure for the sphere and the uniform angle on an equatorial circle.
inline AverageResult avg_fidelity_numeric(const ChannelSpec& spec, const AverageDomain& domain, Measure measure,
                                          const AverageMethod& method) {
    if (measure != natural_measure(domain)) throw RangeError("measure does not match the averaging domain");
    const PreparedChannel ch(spec);
    return detail::average_over(domain, method, [&ch](const PureState& in) { return unconditioned_teleport(ch, in).ncf; });
}

inline AverageResult avg_fidelity_numeric(const ChannelSpec& spec, const AverageDomain& domain,
                                          const AverageMethod& method) {
    return avg_fidelity_numeric(spec, domain, natural_measure(domain), method);
}

/// Default averaging domain for a channel: the matched circle for Theta
/// channels, the whole sphere otherwise.
inline AverageDomain default_domain(const ChannelSpec& spec) {
    if (const auto* th = spec.get_if<ThetaChannel>()) return FamilyDomain{matched_family(th->k)};
    return SphereDomain{};
}

/// Control-power summary for one channel.
struct PowerReport {
    ChannelSpec channel = ChannelSpec::ghz();
    AverageDomain domain = SphereDomain{};
    double f_bar = 0.0;
    double f_stderr = 0.0;
    double c_bar = 0.0;
    double tau = 0.0;
    bool meets_classical_bound = false;
    bool meets_tangle_bound = false;
};

inline constexpr double kBoundTol = 1e-9;

/// Clamps values in [-1e-10, 0) to 0; anything further below is left alone.
inline double clamp_tiny_negative(double x) { return (x < 0.0 && x >= -kInputTol) ? 0.0 : x; }

inline PowerReport power_report(const ChannelSpec& spec, const AverageDomain& domain, const AverageMethod& method) {
    const AverageResult avg = avg_fidelity_numeric(spec, domain, method);
    PowerReport r{spec, domain};
    r.f_bar = std::clamp(clamp_tiny_negative(avg.mean), 0.0, 1.0);
    r.f_stderr = avg.std_error;
    r.c_bar = control_power(r.f_bar);
    const TangleReport t = three_tangle(spec);
    r.tau = clamp_tiny_negative(t.tau);
    r.meets_classical_bound = r.c_bar >= kClassicalPowerBound - kBoundTol;
    r.meets_tangle_bound = t.meets_bound;
    return r;
}

inline PowerReport power_report(const ChannelSpec& spec, const AverageMethod& method = Quadrature{}) {
    return power_report(spec, default_domain(spec), method);
}

}  // namespace ctpower
