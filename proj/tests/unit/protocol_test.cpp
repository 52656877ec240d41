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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ctpower/errors.hpp"
#include "ctpower/protocol.hpp"
#include "gen.hpp"

using namespace ctpower;
using ctpower::testing::Gen;

namespace {

constexpr double kTol = 1e-12;
const double kH = 1.0 / std::sqrt(2.0);
constexpr double kPi = std::numbers::pi;

constexpr std::array<Correction, 4> kCorrections = {Correction::I, Correction::X, Correction::Z, Correction::XZ};

/// Searches {I, X, Z, XZ} for the correction that restores every probe input
/// after the sender's Bell outcome `b` on a pair in frame `f`.
std::optional<Correction> brute_force_correction(PauliFrame f, BellOutcome b, Gen& g) {
    std::vector<PureState> probes;
    for (int i = 0; i < 6; ++i) probes.push_back(g.qubit());
    std::optional<Correction> found;
    for (Correction c : kCorrections) {
        bool ok = true;
        for (const auto& phi : probes) {
            const auto pr = project_two_qubit(tensor(phi, frame_pair(f)), 0, 1, bell_state(b));
            const auto out = apply_gate(correction_gate(c), 0, *pr.post);
            ok = ok && std::norm(inner(phi, out)) > 1.0 - 1e-12;
        }
        if (ok) {
            EXPECT_FALSE(found.has_value()) << "two corrections fit";
            found = c;
        }
    }
    return found;
}

ChannelSpec random_channel(Gen& g) {
    const double t = g.uniform(0.05, kPi / 2 - 0.05);
    switch (g.index(3)) {
        case 0:
            return ChannelSpec::ghz();
        case 1:
            return ChannelSpec::maximal_slice(std::sin(t), g.uniform() < 0.5 ? std::cos(t) : -std::cos(t));
        default:
            return ChannelSpec::theta(std::cos(t), std::sin(t), kAxes[g.index(3)],
                                      g.uniform() < 0.5 ? PauliConvention::Real : PauliConvention::Hermitian);
    }
}

}  // namespace

TEST(InputState, Examples) {
    EXPECT_TRUE(equal_up_to_global_phase(input_state(InputFamily::xy(0.0)), make_qubit(kH, kH)));
    EXPECT_TRUE(equal_up_to_global_phase(input_state(InputFamily::xz(0.0)), PureState::basis(1, 0)));
    EXPECT_TRUE(equal_up_to_global_phase(input_state(InputFamily::yz(kPi / 2)), make_qubit(kH, Amplitude(0, kH))));
}

TEST(InputState, RangeChecks) {
    EXPECT_THROW(InputFamily::arbitrary(-0.1, 0.0), RangeError);
    EXPECT_THROW(InputFamily::arbitrary(1.0, 2 * kPi), RangeError);
    EXPECT_NO_THROW(InputFamily::arbitrary(kPi, 0.0));
    EXPECT_THROW(InputFamily::xy(7.0), RangeError);
}

TEST(InputState, PropertyEquatorialExpectationVanishes) {
    Gen g(30);
    for (int i = 0; i < 100; ++i) {
        const double x = g.uniform(0, 2 * kPi);
        for (EquatorialFamily f : {EquatorialFamily::XZ, EquatorialFamily::XY, EquatorialFamily::YZ}) {
            const auto phi = input_state(InputFamily::equatorial(f, x));
            EXPECT_NEAR(std::abs(expectation(pauli(matched_axis(f)), phi)), 0.0, kTol);
        }
    }
}

TEST(Corrections, GhzExamples) {
    const auto spec = ChannelSpec::ghz();
    const auto first = ControllerOutcome::First;
    EXPECT_TRUE(bob_correction(BellOutcome::PhiPlus, first, spec).approx_equal(kIdentity));
    EXPECT_TRUE(bob_correction(BellOutcome::PhiMinus, first, spec).approx_equal(kSigmaZ));
    EXPECT_TRUE(bob_correction(BellOutcome::PsiPlus, first, spec).approx_equal(kSigmaX));
}

TEST(Corrections, TableMatchesBruteForceOracle) {
    Gen g(31);
    for (PauliFrame f : kPauliFrames) {
        for (BellOutcome b : kBellOutcomes) {
            const auto want = brute_force_correction(f, b, g);
            ASSERT_TRUE(want.has_value());
            EXPECT_EQ(correction_for(f, b), *want) << to_string(b);
        }
    }
}

TEST(Corrections, FramesIdentified) {
    for (PauliFrame f : kPauliFrames) {
        const auto m = identify_frame(frame_pair(f));
        EXPECT_EQ(m.frame, f);
        EXPECT_NEAR(m.overlap, 1.0, kTol);
    }
}

TEST(ControlledTeleport, MsExample) {
    const auto r =
        controlled_teleport(ChannelSpec::maximal_slice(0.6, 0.8), InputFamily::arbitrary(1.1, 2.3));
    EXPECT_EQ(r.branches.size(), 8u);
    for (const auto& b : r.branches) EXPECT_NEAR(b.fidelity, 1.0, kTol);
    EXPECT_NEAR(r.total_probability(), 1.0, kTol);
}

TEST(ControlledTeleport, GhzExample) {
    const auto r = controlled_teleport(ChannelSpec::ghz(), InputFamily::xy(0.7));
    EXPECT_EQ(r.branches.size(), 8u);
    double first = 0.0;
    for (const auto& b : r.branches) {
        EXPECT_NEAR(b.fidelity, 1.0, kTol);
        if (b.controller == ControllerOutcome::First) first += b.probability;
    }
    EXPECT_NEAR(first, 0.5, kTol);
}

TEST(ControlledTeleport, ThetaExample) {
    const auto r = controlled_teleport(ChannelSpec::theta(0.9, std::sqrt(0.19), Axis::Z), InputFamily::xy(1.2));
    for (const auto& b : r.branches) EXPECT_NEAR(b.fidelity, 1.0, kTol);
}

TEST(ControlledTeleport, PropertyPerfectAcrossFamilies) {
    Gen g(32);
    for (int i = 0; i < 200; ++i) {
        const auto spec = random_channel(g);
        const auto r = controlled_teleport(spec, g.qubit());
        EXPECT_NEAR(r.min_fidelity(), 1.0, kTol) << spec.family_name();
        EXPECT_NEAR(r.total_probability(), 1.0, kTol);
    }
}

TEST(ControlledTeleport, PropertyMsControllerProbabilities) {
    Gen g(33);
    for (int i = 0; i < 100; ++i) {
        const double t = g.uniform(0.05, kPi - 0.05);
        const double c = std::sin(t);
        const double d = std::cos(t);
        const auto r = controlled_teleport(ChannelSpec::maximal_slice(c, d), g.qubit());
        double first = 0.0;
        double second = 0.0;
        for (const auto& b : r.branches) (b.controller == ControllerOutcome::First ? first : second) += b.probability;
        EXPECT_NEAR(first, ((1 + d) * (1 + d) + c * c) / 4, kTol);
        EXPECT_NEAR(second, ((1 - d) * (1 - d) + c * c) / 4, kTol);
    }
}

TEST(ControlledTeleport, RawNeedsBasis) {
    const auto raw = ChannelSpec::raw(ghz_state());
    EXPECT_THROW(controlled_teleport(raw, InputFamily::xy(0.1)), MissingControllerBasis);
    const double h = kH;
    const auto r = controlled_teleport(raw, InputFamily::xy(0.1), ControllerBasis{make_qubit(h, h), make_qubit(h, -h)});
    EXPECT_NEAR(r.min_fidelity(), 1.0, kTol);
}

TEST(ControlledTeleport, RawWithComputationalBasisOnTheta) {
    Gen g(34);
    for (int i = 0; i < 50; ++i) {
        const auto spec = random_channel(g);
        if (!spec.get_if<ThetaChannel>()) continue;
        const auto r = controlled_teleport(ChannelSpec::raw(realize(spec)), g.qubit(), computational_basis());
        EXPECT_NEAR(r.min_fidelity(), 1.0, kTol);
    }
}

TEST(ControlledTeleport, ProductChannelFails) {
    const auto r = controlled_teleport(ChannelSpec::raw(PureState::basis(3, 0)), InputFamily::xy(0.4),
                                       computational_basis());
    EXPECT_LT(r.min_fidelity(), 0.9);
}

TEST(Unconditioned, GhzEqualAmplitudes) {
    EXPECT_NEAR(unconditioned_teleport(ChannelSpec::ghz(), InputFamily::xy(0.0)).ncf, 0.5, kTol);
}

TEST(Unconditioned, ProductMsIsPerfect) {
    Gen g(35);
    for (int i = 0; i < 20; ++i) {
        EXPECT_NEAR(unconditioned_teleport(ChannelSpec::maximal_slice(0.0, 1.0), g.qubit()).ncf, 1.0, kTol);
    }
}

TEST(Unconditioned, PropertyMsClosedForm) {
    Gen g(36);
    for (int i = 0; i < 200; ++i) {
        const double t = g.uniform(0, kPi);
        const double c = std::sin(t);
        const double d = std::cos(t);
        const auto phi = g.qubit();
        const auto r = unconditioned_teleport(ChannelSpec::maximal_slice(c, d), phi);
        EXPECT_NEAR(r.ncf, ncf_ms_closed(phi[0], phi[1], d), kTol);
        for (double p : r.outcome_probabilities) EXPECT_NEAR(p, 0.25, kTol);
        EXPECT_TRUE(r.per_outcome_equal);
    }
}

TEST(Unconditioned, PropertyMatchedThetaIsFlat) {
    Gen g(37);
    for (int i = 0; i < 100; ++i) {
        const double a2 = g.uniform();
        const double a = std::sqrt(a2);
        const double b = std::sqrt(1 - a2);
        for (EquatorialFamily f : {EquatorialFamily::XZ, EquatorialFamily::XY, EquatorialFamily::YZ}) {
            const auto spec = ChannelSpec::theta(a, b, matched_axis(f), PauliConvention::Real);
            const auto input = InputFamily::equatorial(f, g.uniform(0, 2 * kPi));
            EXPECT_NEAR(unconditioned_teleport(spec, input).ncf, std::max(a2, 1 - a2), kTol);
        }
    }
}

TEST(Unconditioned, PropertyThetaClosedFormUpperHalf) {
    Gen g(38);
    for (int i = 0; i < 200; ++i) {
        const double a2 = g.uniform(0.5, 1.0);
        const double a = std::sqrt(a2);
        const double b = std::sqrt(1 - a2);
        const Axis k = kAxes[g.index(3)];
        const auto spec = ChannelSpec::theta(a, b, k);
        const auto input = InputFamily::arbitrary(g.uniform(0, kPi), g.uniform(0, 2 * kPi - 1e-9));
        EXPECT_NEAR(unconditioned_teleport(spec, input).ncf, ncf_theta_closed(a, b, k, input), kTol);
    }
}

TEST(Unconditioned, PropertyGlobalPhaseInvariance) {
    Gen g(39);
    for (int i = 0; i < 100; ++i) {
        const auto spec = random_channel(g);
        const auto phi = g.qubit();
        const auto rotated = ctpower::testing::scaled_phase(phi, g.uniform(0, 2 * kPi));
        EXPECT_NEAR(unconditioned_teleport(spec, phi).ncf, unconditioned_teleport(spec, rotated).ncf, kTol);
    }
}

TEST(Unconditioned, PropertyPauliRelabelingPreservesNcf) {
    // Relabeling the receiver's Pauli frame maps a Theta channel onto another
    // one; the no-controller fidelity on the matched family stays the same.
    Gen g(40);
    for (int i = 0; i < 50; ++i) {
        const double a2 = g.uniform(0.5, 1.0);
        const auto base = ChannelSpec::theta_from_a2(a2, Axis::Z);
        const auto phi = input_state(InputFamily::xy(g.uniform(0, 2 * kPi)));
        const auto flipped = ChannelSpec::raw(apply_gate(kSigmaZ, 2, realize(base)));
        EXPECT_NEAR(unconditioned_teleport(base, phi).ncf, unconditioned_teleport(flipped, phi).ncf, 1e-10);
    }
}

TEST(Unconditioned, GenericRawChannelTriggersMismatch) {
    Gen g(41);
    int thrown = 0;
    for (int i = 0; i < 20; ++i) {
        try {
            unconditioned_teleport(ChannelSpec::raw(g.state(3)), g.qubit());
        } catch (const CorrectionMismatch&) {
            ++thrown;
        }
    }
    EXPECT_EQ(thrown, 20);
}

TEST(ClosedForms, MsExamples) {
    EXPECT_NEAR(ncf_ms_closed(1.0, 0.0, 0.3), 1.0, kTol);
    EXPECT_NEAR(ncf_ms_closed(kH, kH, 0.0), 0.5, kTol);
    EXPECT_NEAR(ncf_ms_closed(kH, kH, 1.0), 1.0, kTol);
    EXPECT_THROW(ncf_ms_closed(1.0, 1.0, 0.0), NormalizationError);
}

TEST(ClosedForms, ThetaExamples) {
    for (double t : {0.0, 0.7, 2.0, 5.5}) {
        EXPECT_NEAR(ncf_theta_closed(0.8, 0.6, Axis::Y, InputFamily::xz(t)), 0.64, kTol);
        EXPECT_NEAR(ncf_theta_closed(kH, kH, Axis::Z, InputFamily::xy(t)), 0.5, kTol);
    }
    EXPECT_NEAR(ncf_theta_closed(0.8, 0.6, Axis::Z, InputFamily::xz(0.0)), 1.0, kTol);
}
