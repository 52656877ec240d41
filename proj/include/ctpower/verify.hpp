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
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ctpower/analysis/mismatch.hpp"
#include "ctpower/analysis/power.hpp"
#include "ctpower/analysis/rng.hpp"
#include "ctpower/channels.hpp"
#include "ctpower/format.hpp"
#include "ctpower/protocol.hpp"

// Reproduction suite behind `ctpower verify`. Every check is deterministic
// for a given seed, and the rendered report contains no timings.

namespace ctpower {

struct VerifyOptions {
    std::uint64_t seed = 20140101;
    /// Skip the Monte Carlo estimates.
    bool quick = false;
    /// Extra channel put through the perfect-teleportation check.
    std::optional<ChannelSpec> extra_channel;
    std::optional<ControllerBasis> extra_basis;
};

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace verify_detail {

inline std::string num(double x) { return format_number(x, 17); }

inline InputFamily random_input(CounterRng& rng) {
    using std::numbers::pi;
    const auto pick = rng.next() % 4;
    switch (pick) {
        case 0:
            return InputFamily::arbitrary(std::acos(1.0 - 2.0 * rng.uniform()), 2 * pi * rng.uniform());
        case 1:
            return InputFamily::xz(2 * pi * rng.uniform());
        case 2:
            return InputFamily::xy(2 * pi * rng.uniform());
        default:
            return InputFamily::yz(2 * pi * rng.uniform());
    }
}

inline ChannelSpec random_channel(CounterRng& rng, std::size_t i) {
    switch (i % 3) {
        case 0:
            return ChannelSpec::ghz();
        case 1: {
            const double d = 2.0 * rng.uniform() - 1.0;
            return ChannelSpec::maximal_slice(std::sqrt(1.0 - d * d), d);
        }
        default: {
            const double a2 = rng.uniform();
            const Axis k = kAxes[rng.next() % 3];
            const auto conv = rng.next() % 2 ? PauliConvention::Real : PauliConvention::Hermitian;
            return ChannelSpec::theta_from_a2(a2, k, conv);
        }
    }
}

inline CheckResult perfect_ct(const VerifyOptions& opt) {
    CounterRng rng(opt.seed, 1);
    double worst_fid = 1.0;
    double worst_sum = 0.0;
    std::size_t branches = 0;
    for (std::size_t i = 0; i < 200; ++i) {
        const ChannelSpec ch = random_channel(rng, i);
        const CtRunResult r = controlled_teleport(ch, random_input(rng));
        worst_fid = std::min(worst_fid, r.min_fidelity());
        worst_sum = std::max(worst_sum, std::abs(r.total_probability() - 1.0));
        branches += r.branches.size();
    }
    const bool ok = worst_fid >= 1.0 - 1e-12 && worst_sum <= 1e-12;
    return {1, "perfect-ct", ok,
            "pairs=200 branches=" + std::to_string(branches) + " min_fidelity=" + num(worst_fid) +
                " max_prob_sum_error=" + num(worst_sum)};
}

inline CheckResult ms_closed_form(const VerifyOptions&) {
    using std::numbers::pi;
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const InputFamily in = InputFamily::arbitrary(pi * i / 9.0, 0.61 * i);
        const PureState phi = input_state(in);
        for (int j = 0; j < 10; ++j) {
            const double d = -1.0 + 2.0 * j / 9.0;
            const ChannelSpec ch = ChannelSpec::maximal_slice(std::sqrt(std::max(0.0, 1.0 - d * d)), d);
            const double sim = unconditioned_teleport(ch, phi).ncf;
            worst = std::max(worst, std::abs(sim - ncf_ms_closed(phi[0], phi[1], d)));
        }
    }
    return {2, "ms-ncf-closed-form", worst <= 1e-12, "grid=10x10 max_abs_error=" + num(worst)};
}

inline CheckResult ms_sphere_average(const VerifyOptions& opt) {
    double worst = 0.0;
    for (int i = 0; i <= 10; ++i) {
        const double d = i / 10.0;
        const ChannelSpec ch = ChannelSpec::maximal_slice(std::sqrt(std::max(0.0, 1.0 - d * d)), d);
        const double q = avg_fidelity_numeric(ch, SphereDomain{}, Quadrature{}).mean;
        worst = std::max(worst, std::abs(q - avg_fidelity_ms_analytic(d)));
    }
    bool ok = worst <= 1e-9;
    std::string detail = "quadrature_points=11 max_abs_error=" + num(worst);
    if (!opt.quick) {
        CounterRng pick(opt.seed, 3);
        double worst_z = 0.0;
        double worst_abs = 0.0;
        for (std::uint64_t s = 0; s < 5; ++s) {
            const double d = 2.0 * pick.uniform() - 1.0;
            const ChannelSpec ch = ChannelSpec::maximal_slice(std::sqrt(1.0 - d * d), d);
            const AverageResult mc = avg_fidelity_numeric(ch, SphereDomain{}, MonteCarlo{1'000'000, opt.seed, 100 + s});
            const double err = std::abs(mc.mean - avg_fidelity_ms_analytic(d));
            worst_abs = std::max(worst_abs, err);
            worst_z = std::max(worst_z, err / mc.std_error);
        }
        ok = ok && worst_z <= 4.0 && worst_abs <= 2e-3;
        detail += " monte_carlo_runs=5 n=1000000 max_z=" + num(worst_z) + " max_abs_error=" + num(worst_abs);
    }
    return {3, "ms-sphere-average", ok, detail};
}

inline CheckResult ghz_classical_limit(const VerifyOptions&) {
    const PowerReport r = power_report(ChannelSpec::ghz(), SphereDomain{}, Quadrature{});
    const bool ok = std::abs(r.f_bar - kClassicalFidelity) <= 1e-9 && std::abs(r.c_bar - kClassicalPowerBound) <= 1e-9;
    return {4, "ghz-classical-limit", ok, "f_bar=" + num(r.f_bar) + " c_bar=" + num(r.c_bar)};
}

inline CheckResult matched_theta_flatness(const VerifyOptions&) {
    using std::numbers::pi;
    double worst_value = 0.0;
    double worst_sd = 0.0;
    for (auto name : {NamedChannel::TetrahedralXZ, NamedChannel::MsXY, NamedChannel::PsiYZ}) {
        for (double a2 : {0.2, 1.0 / 3.0, 0.5, 0.7, 0.95}) {
            const ChannelSpec ch = named_channel(name, std::sqrt(a2), std::sqrt(1.0 - a2));
            const PreparedChannel prep(ch);
            const double expect = std::max(a2, 1.0 - a2);
            double sum = 0.0;
            double sum2 = 0.0;
            for (int i = 0; i < 100; ++i) {
                const double f =
                    unconditioned_teleport(prep, input_state(InputFamily::equatorial(family_of(name), 2 * pi * i / 100)))
                        .ncf;
                worst_value = std::max(worst_value, std::abs(f - expect));
                sum += f - expect;
                sum2 += (f - expect) * (f - expect);
            }
            const double mean = sum / 100;
            worst_sd = std::max(worst_sd, std::sqrt(std::max(0.0, sum2 / 100 - mean * mean)));
        }
    }
    const bool ok = worst_value <= 1e-12 && worst_sd < 1e-12;
    return {5, "matched-theta-flatness", ok, "max_abs_error=" + num(worst_value) + " max_stddev=" + num(worst_sd)};
}

inline CheckResult bound_triple_identity(const VerifyOptions&) {
    int disagreements = 0;
    int inside = 0;
    for (int i = 0; i <= 200; ++i) {
        const double a2 = i / 200.0;
        const ChannelSpec ch = ChannelSpec::theta_from_a2(a2, Axis::Z);
        const double f = unconditioned_teleport(ch, input_state(InputFamily::xy(0.3))).ncf;
        const bool by_power = control_power(f) >= kClassicalPowerBound - kExactTol;
        const bool by_interval = power_bound_check(std::sqrt(a2));
        const bool by_tangle = three_tangle(ch).tau >= kTangleBound - kExactTol;
        if (by_power != by_interval || by_interval != by_tangle) ++disagreements;
        inside += by_interval ? 1 : 0;
    }
    return {6, "bound-triple-identity", disagreements == 0,
            "grid=201 disagreements=" + std::to_string(disagreements) + " inside=" + std::to_string(inside)};
}

inline CheckResult max_control_power(const VerifyOptions&) {
    double worst = 0.0;
    const double h = 1.0 / std::sqrt(2.0);
    for (auto name : {NamedChannel::TetrahedralXZ, NamedChannel::MsXY, NamedChannel::PsiYZ}) {
        const double f =
            unconditioned_teleport(named_channel(name, h, h), InputFamily::equatorial(family_of(name), 1.0)).ncf;
        worst = std::max(worst, std::abs(control_power(f) - kMaxControlPower));
    }
    return {7, "max-control-power", worst <= 1e-12, "max_abs_error=" + num(worst)};
}

inline CheckResult tangle_agreement(const VerifyOptions& opt) {
    double worst = 0.0;
    for (int i = 0; i <= 10; ++i) {
        const double c = i / 10.0;
        worst = std::max(worst, std::abs(three_tangle(ms_state(c, std::sqrt(1.0 - c * c))).tau - c * c));
        const double a2 = i / 10.0;
        for (Axis k : kAxes) {
            const double tau = three_tangle(ChannelSpec::theta_from_a2(a2, k)).tau;
            worst = std::max(worst, std::abs(tau - 4 * a2 * (1 - a2)));
        }
    }
    worst = std::max(worst, std::abs(three_tangle(ghz_state()).tau - 1.0));
    worst = std::max(worst, three_tangle(tensor(PureState::basis(1, 0), bell_state(BellOutcome::PhiPlus))).tau);

    CounterRng rng(opt.seed, 8);
    const auto random_unitary = [&rng] {
        using std::numbers::pi;
        const double a = 2 * pi * rng.uniform();
        const double b = std::acos(1.0 - 2.0 * rng.uniform());
        const double c = 2 * pi * rng.uniform();
        const Amplitude e1 = std::polar(1.0, (a + c) / 2);
        const Amplitude e2 = std::polar(1.0, (a - c) / 2);
        const double cb = std::cos(b / 2);
        const double sb = std::sin(b / 2);
        return SingleQubitGate{{std::conj(e1) * cb, -std::conj(e2) * sb, e2 * sb, e1 * cb}};
    };
    double worst_lu = 0.0;
    const PureState base = theta_channel(0.8, 0.6, Axis::Y);
    const double tau0 = three_tangle(base).tau;
    for (int i = 0; i < 50; ++i) {
        const std::array<SingleQubitGate, 3> us{random_unitary(), random_unitary(), random_unitary()};
        worst_lu = std::max(worst_lu, std::abs(three_tangle(apply_local(us, base)).tau - tau0));
    }
    const bool ok = worst <= 1e-9 && worst_lu <= 1e-9;
    return {8, "three-tangle", ok, "max_family_error=" + num(worst) + " max_local_unitary_drift=" + num(worst_lu)};
}

inline CheckResult mismatch_experiment(const VerifyOptions&) {
    double worst_violation = 0.0;
    for (int i = 0; i <= 10; ++i) {
        const double a2 = 0.5 + 0.05 * i;
        const double a = std::sqrt(a2);
        const double b = std::sqrt(1.0 - a2);
        for (auto ci : kEquatorialFamilies) {
            const double matched = mismatch_row(a, b, ci, ci).f_bar;
            for (auto ij : kEquatorialFamilies) {
                if (ij == ci) continue;
                worst_violation = std::max(worst_violation, matched - mismatch_row(a, b, ci, ij).f_bar);
            }
        }
    }
    const ClassicalLimitCheck flag = classical_limit_check();
    return {9, "mismatch-experiment", worst_violation <= 1e-12,
            "max_matched_minus_mismatched=" + num(worst_violation) +
                " equal_weight_max_mismatched_c_bar=" + num(flag.max_mismatched_c_bar) +
                " classical_limit_claim_agrees=" + (flag.agrees ? "true" : "false")};
}

inline CheckResult rerun_determinism(const VerifyOptions& opt) {
    const ChannelSpec ch = ChannelSpec::maximal_slice(0.6, 0.8);
    bool same = true;
    const auto q1 = avg_fidelity_numeric(ch, SphereDomain{}, Quadrature{}).mean;
    const auto q2 = avg_fidelity_numeric(ch, SphereDomain{}, Quadrature{}).mean;
    same = same && q1 == q2;
    if (!opt.quick) {
        const auto m1 = avg_fidelity_numeric(ch, SphereDomain{}, MonteCarlo{20'000, opt.seed, 10});
        const auto m2 = avg_fidelity_numeric(ch, SphereDomain{}, MonteCarlo{20'000, opt.seed, 10});
        same = same && m1.mean == m2.mean && m1.std_error == m2.std_error;
    }
    return {10, "rerun-determinism", same, std::string("bitwise_equal=") + (same ? "true" : "false")};
}

inline CheckResult extra_channel(const VerifyOptions& opt) {
    const ChannelSpec& ch = *opt.extra_channel;
    std::optional<ControllerBasis> basis = opt.extra_basis;
    if (!basis && ch.get_if<RawChannel>()) basis = computational_basis();
    CounterRng rng(opt.seed, 11);
    double worst_fid = 1.0;
    double worst_sum = 0.0;
    for (int i = 0; i < 20; ++i) {
        const CtRunResult r = controlled_teleport(ch, random_input(rng), basis);
        worst_fid = std::min(worst_fid, r.min_fidelity());
        worst_sum = std::max(worst_sum, std::abs(r.total_probability() - 1.0));
    }
    const bool ok = worst_fid >= 1.0 - 1e-9 && worst_sum <= 1e-12;
    return {11, "extra-channel-" + std::string(ch.family_name()), ok,
            "min_fidelity=" + num(worst_fid) + " max_prob_sum_error=" + num(worst_sum)};
}

}  // namespace verify_detail

inline std::vector<CheckResult> run_verification(const VerifyOptions& opt = {}) {
    namespace v = verify_detail;
    std::vector<CheckResult> out;
    const auto guarded = [&out, &opt](int id, const char* name, CheckResult (*fn)(const VerifyOptions&)) {
        try {
            out.push_back(fn(opt));
        } catch (const std::exception& e) {
            out.push_back({id, name, false, std::string("error: ") + e.what()});
        }
    };
    guarded(1, "perfect-ct", v::perfect_ct);
    guarded(2, "ms-ncf-closed-form", v::ms_closed_form);
    guarded(3, "ms-sphere-average", v::ms_sphere_average);
    guarded(4, "ghz-classical-limit", v::ghz_classical_limit);
    guarded(5, "matched-theta-flatness", v::matched_theta_flatness);
    guarded(6, "bound-triple-identity", v::bound_triple_identity);
    guarded(7, "max-control-power", v::max_control_power);
    guarded(8, "three-tangle", v::tangle_agreement);
    guarded(9, "mismatch-experiment", v::mismatch_experiment);
    guarded(10, "rerun-determinism", v::rerun_determinism);
    if (opt.extra_channel) guarded(11, "extra-channel", v::extra_channel);
    return out;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        if (!r.passed) return false;
    }
    return true;
}

inline std::string render_verification(const std::vector<CheckResult>& results, std::uint64_t seed, bool quick) {
    std::ostringstream out;
    out << "ctpower verify seed=" << seed << (quick ? " quick" : "") << "\n";
    int passed = 0;
    for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail << "\n";
        passed += r.passed ? 1 : 0;
    }
    out << passed << "/" << results.size() << " checks passed\n";
    return out.str();
}

}  // namespace ctpower
