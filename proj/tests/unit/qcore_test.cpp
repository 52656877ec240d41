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
#include "ctpower/qcore.hpp"
#include "gen.hpp"

using namespace ctpower;
using ctpower::testing::Gen;

namespace {

constexpr double kTol = 1e-12;
const double kH = 1.0 / std::sqrt(2.0);

void expect_amps(const PureState& s, std::initializer_list<Amplitude> want) {
    ASSERT_EQ(s.dim(), want.size());
    std::size_t i = 0;
    for (Amplitude w : want) {
        EXPECT_NEAR(std::abs(s[i] - w), 0.0, kTol) << "index " << i;
        ++i;
    }
}

}  // namespace

TEST(PureState, BasisQubit) { expect_amps(make_qubit(1.0, 0.0), {1.0, 0.0}); }

TEST(PureState, PlusQubit) { expect_amps(make_qubit(kH, kH), {kH, kH}); }

TEST(PureState, BlochParametrizationIsNormalized) {
    const double t = std::numbers::pi / 3;
    const double p = std::numbers::pi / 4;
    const auto s = make_qubit(std::cos(t / 2), std::polar(std::sin(t / 2), p));
    EXPECT_NEAR(s.norm_squared(), 1.0, kTol);
}

TEST(PureState, RejectsUnnormalized) {
    EXPECT_THROW(make_qubit(1.0, 1.0), NormalizationError);
    EXPECT_THROW(PureState::from_amplitudes({1.0, 0.0, 0.0}), DimensionError);
}

TEST(PureState, RejectsTooManyQubits) {
    EXPECT_THROW(tensor(PureState::basis(3, 0), PureState::basis(2, 0)), DimensionError);
}

TEST(Tensor, ComputationalBasis) {
    expect_amps(tensor(PureState::basis(1, 0), PureState::basis(1, 1)), {0.0, 1.0, 0.0, 0.0});
}

TEST(Tensor, PlusWithZero) { expect_amps(tensor(make_qubit(kH, kH), PureState::basis(1, 0)), {kH, 0.0, kH, 0.0}); }

TEST(Tensor, FourQubitNorm) {
    StateBuilder ghz(3);
    ghz.add_basis(kH, 0).add_basis(kH, 7);
    const auto s = tensor(make_qubit(0.6, 0.8), ghz.build());
    EXPECT_EQ(s.num_qubits(), 4u);
    EXPECT_NEAR(s.norm_squared(), 1.0, kTol);
}

TEST(Pauli, Matrices) {
    EXPECT_TRUE(pauli(Axis::X).approx_equal({{0.0, 1.0, 1.0, 0.0}}));
    EXPECT_TRUE(pauli(Axis::Z).approx_equal({{1.0, 0.0, 0.0, -1.0}}));
    EXPECT_TRUE(pauli(Axis::Y).approx_equal({{0.0, Amplitude(0, -1), Amplitude(0, 1), 0.0}}));
    EXPECT_TRUE(real_pauli(Axis::Y).approx_equal({{0.0, -1.0, 1.0, 0.0}}));
    for (Axis k : kAxes) {
        EXPECT_TRUE(pauli(k).is_unitary());
        EXPECT_TRUE(pauli(k).is_hermitian());
        EXPECT_TRUE((pauli(k) * pauli(k)).approx_equal(kIdentity));
    }
}

TEST(Pauli, RealSigmaYGivesSameSquaredExpectation) {
    Gen g(1);
    for (int i = 0; i < 200; ++i) {
        const auto phi = g.qubit();
        EXPECT_NEAR(std::norm(expectation(kSigmaY, phi)), std::norm(expectation(kRealSigmaY, phi)), kTol);
    }
}

TEST(ApplyGate, FlipFirstQubit) { expect_amps(apply_gate(kSigmaX, 0, PureState::basis(2, 0)), {0.0, 0.0, 1.0, 0.0}); }

TEST(ApplyGate, IdentityAndInvolution) {
    const auto plus = make_qubit(kH, kH);
    EXPECT_EQ(apply_gate(kIdentity, 0, plus), plus);
    EXPECT_LT(max_abs_diff(apply_gate(kSigmaZ, 0, apply_gate(kSigmaZ, 0, plus)), plus), kTol);
}

TEST(ApplyGate, TargetOutOfRange) { EXPECT_THROW(apply_gate(kSigmaX, 2, PureState::basis(2, 0)), IndexError); }

TEST(ApplyGate, PropertyNormPreservation) {
    Gen g(2);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 1 + g.index(4);
        auto s = g.state(n);
        s = apply_gate(g.unitary(), g.index(n), s);
        EXPECT_NEAR(s.norm_squared(), 1.0, kTol);
    }
}

TEST(ApplyGate, PropertyLinearity) {
    Gen g(3);
    for (int i = 0; i < 100; ++i) {
        const auto u = g.unitary();
        const auto a = g.state(3);
        const auto b = g.state(3);
        const Amplitude alpha = g.complex_gaussian();
        const Amplitude beta = g.complex_gaussian();
        StateBuilder sum(3);
        sum.add(alpha, a).add(beta, b);
        double nrm = 0.0;
        for (Amplitude x : sum.raw()) nrm += std::norm(x);
        nrm = std::sqrt(nrm);
        const auto lhs = apply_gate(u, 1, sum.build_normalized());
        StateBuilder rhs(3);
        rhs.add(alpha / nrm, apply_gate(u, 1, a)).add(beta / nrm, apply_gate(u, 1, b));
        EXPECT_LT(max_abs_diff(lhs, rhs.build()), 1e-11);
    }
}

TEST(Bell, Definitions) {
    expect_amps(bell_state(BellOutcome::PhiPlus), {kH, 0.0, 0.0, kH});
    expect_amps(bell_state(BellOutcome::PsiMinus), {0.0, kH, -kH, 0.0});
    EXPECT_NEAR(std::abs(inner(bell_state(BellOutcome::PhiPlus), bell_state(BellOutcome::PhiMinus))), 0.0, kTol);
}

TEST(Bell, Orthonormal) {
    for (auto a : kBellOutcomes) {
        for (auto b : kBellOutcomes) {
            EXPECT_NEAR(std::abs(inner(bell_state(a), bell_state(b))), a == b ? 1.0 : 0.0, kTol);
        }
    }
}

TEST(Project, BellBranchOfGhzRun) {
    StateBuilder ghz(3);
    ghz.add_basis(kH, 0).add_basis(kH, 7);
    const auto run = tensor(make_qubit(0.6, 0.8), ghz.build());
    const auto pr = project_two_qubit(run, 0, 2, bell_state(BellOutcome::PhiPlus));
    EXPECT_NEAR(pr.probability, 0.25, kTol);
    ASSERT_TRUE(pr.possible());
    EXPECT_EQ(pr.post->num_qubits(), 2u);
}

TEST(Project, ImpossibleOutcome) {
    const auto pr = project_two_qubit(PureState::basis(3, 0), 0, 1, bell_state(BellOutcome::PsiPlus));
    EXPECT_NEAR(pr.probability, 0.0, kTol);
    EXPECT_FALSE(pr.possible());
}

TEST(Project, SameQubitTwice) {
    EXPECT_THROW(project_two_qubit(PureState::basis(3, 0), 1, 1, bell_state(BellOutcome::PhiPlus)), IndexError);
}

TEST(Project, PropertyBellCompleteness) {
    Gen g(4);
    for (int i = 0; i < 200; ++i) {
        const auto s = g.state(4);
        const std::size_t qi = g.index(4);
        const std::size_t qj = (qi + 1 + g.index(3)) % 4;
        double total = 0.0;
        for (auto o : kBellOutcomes) total += project_two_qubit(s, qi, qj, bell_state(o)).probability;
        EXPECT_NEAR(total, 1.0, kTol);
    }
}

TEST(Project, PropertySingleQubitCompleteness) {
    Gen g(5);
    for (int i = 0; i < 200; ++i) {
        const auto s = g.state(3);
        const auto u = g.unitary();
        const auto e0 = apply_gate(u, 0, PureState::basis(1, 0));
        const auto e1 = apply_gate(u, 0, PureState::basis(1, 1));
        const std::size_t q = g.index(3);
        EXPECT_NEAR(project_single_qubit(s, q, e0).probability + project_single_qubit(s, q, e1).probability, 1.0,
                    kTol);
    }
}

TEST(Density, Examples) {
    const auto zero = to_density(PureState::basis(1, 0));
    EXPECT_NEAR(std::abs(zero(0, 0) - 1.0), 0.0, kTol);
    EXPECT_NEAR(std::abs(zero(1, 1)), 0.0, kTol);
    const auto plus = to_density(make_qubit(kH, kH));
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) EXPECT_NEAR(std::abs(plus(r, c) - 0.5), 0.0, kTol);
    }
    EXPECT_NEAR(std::abs(plus.as_operator().trace() - 1.0), 0.0, kTol);
}

TEST(Density, RejectsNonPhysical) {
    QubitOperator op(1, {1.5, 0.0, 0.0, -0.5});
    EXPECT_THROW(DensityOperator::from_operator(op), NormalizationError);
    QubitOperator skew(1, {0.5, 0.3, 0.1, 0.5});
    EXPECT_THROW(DensityOperator::from_operator(skew), NormalizationError);
}

TEST(PartialTrace, BellMarginalIsMaximallyMixed) {
    const auto m = partial_trace(to_density(bell_state(BellOutcome::PhiPlus)), {0});
    EXPECT_NEAR(std::abs(m(0, 0) - 0.5), 0.0, kTol);
    EXPECT_NEAR(std::abs(m(1, 1) - 0.5), 0.0, kTol);
    EXPECT_NEAR(std::abs(m(0, 1)), 0.0, kTol);
}

TEST(PartialTrace, BasisInputBranchLeavesZero) {
    // First Bell branch with k0 = 1 on qubits (controller, receiver): |+>|0>.
    const auto branch = tensor(make_qubit(kH, kH), PureState::basis(1, 0));
    const auto m = partial_trace(to_density(branch), {0});
    EXPECT_LT(m.max_abs_diff(to_density(PureState::basis(1, 0))), kTol);
}

TEST(PartialTrace, InvalidDiscardSets) {
    const auto rho = to_density(PureState::basis(2, 0));
    EXPECT_THROW(partial_trace(rho, {0, 1}), IndexError);
    EXPECT_THROW(partial_trace(rho, std::span<const std::size_t>{}), IndexError);
    EXPECT_THROW(partial_trace(rho, {2}), IndexError);
}

TEST(PartialTrace, PropertyProductRule) {
    Gen g(6);
    for (int i = 0; i < 100; ++i) {
        const auto a = g.state(1);
        const auto b = g.state(2);
        const auto m = partial_trace(to_density(tensor(a, b)), {0});
        EXPECT_LT(m.max_abs_diff(to_density(b)), kTol);
        const auto n = partial_trace(to_density(tensor(a, b)), {1, 2});
        EXPECT_LT(n.max_abs_diff(to_density(a)), kTol);
    }
}

TEST(PartialTrace, PropertyTracePreserved) {
    Gen g(7);
    for (int i = 0; i < 100; ++i) {
        const auto rho = to_density(g.state(4));
        const auto m = partial_trace(rho, {g.index(4)});
        EXPECT_NEAR(std::abs(m.as_operator().trace() - 1.0), 0.0, kTol);
        EXPECT_GT(m.as_operator().min_eigenvalue(), -1e-10);
    }
}

TEST(Fidelity, Examples) {
    EXPECT_NEAR(fidelity_with_pure(to_density(PureState::basis(1, 0)), PureState::basis(1, 0)), 1.0, kTol);
    const std::array<double, 2> w{0.5, 0.5};
    const std::array<DensityOperator, 2> parts{to_density(PureState::basis(1, 0)), to_density(PureState::basis(1, 1))};
    const auto mixed = mix(w, parts);
    Gen g(8);
    for (int i = 0; i < 20; ++i) EXPECT_NEAR(fidelity_with_pure(mixed, g.qubit()), 0.5, kTol);
}

TEST(Fidelity, DimensionMismatch) {
    EXPECT_THROW(fidelity_with_pure(to_density(PureState::basis(2, 0)), PureState::basis(1, 0)), DimensionError);
}

TEST(Fidelity, PropertyRangeAndUnitaryInvariance) {
    Gen g(9);
    for (int i = 0; i < 200; ++i) {
        const auto a = g.qubit();
        const auto b = g.qubit();
        const double f = fidelity_with_pure(to_density(a), b);
        EXPECT_GE(f, 0.0);
        EXPECT_LE(f, 1.0);
        const auto u = g.unitary();
        EXPECT_NEAR(fidelity_with_pure(to_density(apply_gate(u, 0, a)), apply_gate(u, 0, b)), f, 1e-12);
        EXPECT_NEAR(fidelity_with_pure(to_density(a), a), 1.0, kTol);
    }
}

TEST(GlobalPhase, Examples) {
    const auto zero = PureState::basis(1, 0);
    EXPECT_TRUE(equal_up_to_global_phase(zero, ctpower::testing::scaled_phase(zero, std::numbers::pi / 3)));
    EXPECT_FALSE(equal_up_to_global_phase(zero, PureState::basis(1, 1)));
    const auto phi = bell_state(BellOutcome::PhiPlus);
    EXPECT_FALSE(equal_up_to_global_phase(phi, apply_gate(kSigmaZ, 0, phi)));
}

TEST(GlobalPhase, PropertyRandomPhases) {
    Gen g(10);
    for (int i = 0; i < 100; ++i) {
        const auto s = g.state(3);
        EXPECT_TRUE(equal_up_to_global_phase(s, ctpower::testing::scaled_phase(s, g.uniform(0, 6.28))));
    }
}
