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
#include <cmath>
#include <numbers>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "ctpower/channels.hpp"
#include "ctpower/qcore.hpp"

namespace ctpower {

// Register layout for a run: qubit 0 is the input, 1 the controller's,
// 2 the sender's, 3 the receiver's.
inline constexpr std::size_t kInputQubit = 0;
inline constexpr std::size_t kControllerQubit = 1;
inline constexpr std::size_t kSenderQubit = 2;
inline constexpr std::size_t kReceiverQubit = 3;

struct ArbitraryInput {
    double theta = 0.0;  // Bloch polar angle, [0, pi]
    double phi = 0.0;    // [0, 2pi)
};
struct XZInput {
    double theta = 0.0;  // angle on the circle, [0, 2pi)
};
struct XYInput {
    double phi = 0.0;  // [0, 2pi)
};
struct YZInput {
    double theta = 0.0;  // [0, 2pi)
};

/// A single-qubit input drawn from the full Bloch sphere or one of the
/// equatorial circles.
class InputFamily {
   public:
    using Variant = std::variant<ArbitraryInput, XZInput, XYInput, YZInput>;

    static InputFamily arbitrary(double theta, double phi) {
        check(theta, 0.0, std::numbers::pi, true, "theta");
        check(phi, 0.0, 2 * std::numbers::pi, false, "phi");
        return InputFamily(ArbitraryInput{theta, phi});
    }
    static InputFamily xz(double theta) {
        check(theta, 0.0, 2 * std::numbers::pi, false, "theta");
        return InputFamily(XZInput{theta});
    }
    static InputFamily xy(double phi) {
        check(phi, 0.0, 2 * std::numbers::pi, false, "phi");
        return InputFamily(XYInput{phi});
    }
    static InputFamily yz(double theta) {
        check(theta, 0.0, 2 * std::numbers::pi, false, "theta");
        return InputFamily(YZInput{theta});
    }
    /// Member of an equatorial family at circle angle `angle`.
    static InputFamily equatorial(EquatorialFamily f, double angle) {
        switch (f) {
            case EquatorialFamily::XZ:
                return xz(angle);
            case EquatorialFamily::XY:
                return xy(angle);
            case EquatorialFamily::YZ:
                break;
        }
        return yz(angle);
    }

    const Variant& variant() const { return v_; }

   private:
    explicit InputFamily(Variant v) : v_(v) {}

    static void check(double x, double lo, double hi, bool closed, const char* name) {
        if (!std::isfinite(x) || x < lo || x > hi || (!closed && x == hi)) {
            throw RangeError(std::string(name) + " = " + std::to_string(x) + " is out of range");
        }
    }

    Variant v_;
};

inline PureState input_state(const InputFamily& f) {
    using std::cos, std::sin;
    using namespace std::complex_literals;
    return std::visit(
        [](const auto& in) -> PureState {
            using T = std::decay_t<decltype(in)>;
            if constexpr (std::is_same_v<T, ArbitraryInput>) {
                return make_qubit(cos(in.theta / 2), std::polar(sin(in.theta / 2), in.phi));
            } else if constexpr (std::is_same_v<T, XZInput>) {
                return make_qubit(cos(in.theta / 2), sin(in.theta / 2));
            } else if constexpr (std::is_same_v<T, XYInput>) {
                const double h = 1.0 / std::sqrt(2.0);
                return make_qubit(h, std::polar(h, in.phi));
            } else {
                return make_qubit(cos(in.theta / 2), 1i * sin(in.theta / 2));
            }
        },
        f.variant());
}

/// Which Bell pair the sender and receiver hold: (I (x) sigma)|Phi+>.
enum class PauliFrame { I, X, Y, Z };

inline constexpr std::array<PauliFrame, 4> kPauliFrames = {PauliFrame::I, PauliFrame::X, PauliFrame::Y, PauliFrame::Z};

inline constexpr PauliFrame frame_of(Axis k) {
    switch (k) {
        case Axis::X:
            return PauliFrame::X;
        case Axis::Y:
            return PauliFrame::Y;
        case Axis::Z:
            break;
    }
    return PauliFrame::Z;
}

inline PureState frame_pair(PauliFrame f) {
    const PureState phi_plus = bell_state(BellOutcome::PhiPlus);
    switch (f) {
        case PauliFrame::I:
            return phi_plus;
        case PauliFrame::X:
            return apply_gate(kSigmaX, 1, phi_plus);
        case PauliFrame::Y:
            return apply_gate(kSigmaY, 1, phi_plus);
        case PauliFrame::Z:
            break;
    }
    return apply_gate(kSigmaZ, 1, phi_plus);
}

/// Receiver corrections: products X^x Z^z, with Z acting first.
enum class Correction { I, X, Z, XZ };

inline constexpr std::string_view to_string(Correction c) {
    constexpr std::array<std::string_view, 4> names = {"I", "X", "Z", "XZ"};
    return names[static_cast<std::size_t>(c)];
}

inline SingleQubitGate correction_gate(Correction c) {
    switch (c) {
        case Correction::I:
            return kIdentity;
        case Correction::X:
            return kSigmaX;
        case Correction::Z:
            return kSigmaZ;
        case Correction::XZ:
            break;
    }
    return kSigmaX * kSigmaZ;
}

/// kCorrectionTable[frame][bell] restores the input exactly when the shared
/// pair is in `frame` and the sender reports `bell`.
inline constexpr std::array<std::array<Correction, 4>, 4> kCorrectionTable = {{
    // Phi+          Phi-            Psi+            Psi-
    {{Correction::I, Correction::Z, Correction::X, Correction::XZ}},   // I
    {{Correction::X, Correction::XZ, Correction::I, Correction::Z}},   // X
    {{Correction::XZ, Correction::X, Correction::Z, Correction::I}},   // Y
    {{Correction::Z, Correction::I, Correction::XZ, Correction::X}},   // Z
}};

inline constexpr Correction correction_for(PauliFrame f, BellOutcome b) {
    return kCorrectionTable[static_cast<std::size_t>(f)][static_cast<std::size_t>(b)];
}

/// The frame whose Bell pair best matches a two-qubit state, with the overlap |<pair|s>|^2.
struct FrameMatch {
    PauliFrame frame = PauliFrame::I;
    double overlap = 0.0;
};

inline FrameMatch identify_frame(const PureState& pair) {
    if (pair.num_qubits() != 2) throw DimensionError("frame identification needs a 2-qubit state");
    FrameMatch best;
    best.overlap = -1.0;
    for (PauliFrame f : kPauliFrames) {
        const double ov = std::norm(inner(frame_pair(f), pair));
        if (ov > best.overlap + kExactTol) best = {f, ov};
    }
    return best;
}

enum class ControllerOutcome { First, Second };

inline constexpr std::array<ControllerOutcome, 2> kControllerOutcomes = {ControllerOutcome::First,
                                                                         ControllerOutcome::Second};

inline constexpr std::string_view to_string(ControllerOutcome o) { return o == ControllerOutcome::First ? "0" : "1"; }

/// The controller's measurement basis for a channel family: the MS basis for
/// GHZ and MS channels, the computational basis for Theta channels. Raw
/// channels have none.
inline ControllerBasis controller_basis(const ChannelSpec& spec) {
    if (spec.get_if<GhzChannel>()) return charlie_basis(1.0, 0.0);
    if (const auto* ms = spec.get_if<MaximalSliceChannel>()) return charlie_basis(ms->c, ms->d);
    if (spec.get_if<ThetaChannel>()) return computational_basis();
    throw MissingControllerBasis("raw channels need an explicit controller basis");
}

/// Shared pair left behind after the controller reports `o` in controller_basis(spec).
inline PauliFrame shared_frame(const ChannelSpec& spec, ControllerOutcome o) {
    if (spec.get_if<GhzChannel>() || spec.get_if<MaximalSliceChannel>()) {
        return o == ControllerOutcome::First ? PauliFrame::I : PauliFrame::Z;
    }
    if (const auto* th = spec.get_if<ThetaChannel>()) {
        return o == ControllerOutcome::First ? PauliFrame::I : frame_of(th->k);
    }
    throw MissingControllerBasis("raw channels need an explicit controller basis");
}

/// Frame whose Bell pair carries the most weight in the sender/receiver
/// marginal of a channel state. Ties go to the earlier frame.
inline PauliFrame dominant_frame(const PureState& channel) {
    if (channel.num_qubits() != 3) throw DimensionError("channel must be a 3-qubit state");
    const DensityOperator pair = partial_trace(to_density(channel), {0});
    PauliFrame best = PauliFrame::I;
    double best_w = -1.0;
    for (PauliFrame f : kPauliFrames) {
        const double w = fidelity_with_pure(pair, frame_pair(f));
        if (w > best_w + kExactTol) {
            best = f;
            best_w = w;
        }
    }
    return best;
}

/// Frame the receiver corrects for when the controller stays silent: the
/// larger-weight branch of the channel.
inline PauliFrame dominant_frame(const ChannelSpec& spec) {
    if (spec.get_if<GhzChannel>()) return PauliFrame::I;
    if (const auto* ms = spec.get_if<MaximalSliceChannel>()) return ms->d >= 0.0 ? PauliFrame::I : PauliFrame::Z;
    if (const auto* th = spec.get_if<ThetaChannel>()) {
        return th->a * th->a >= th->b * th->b ? PauliFrame::I : frame_of(th->k);
    }
    return dominant_frame(realize(spec));
}

inline SingleQubitGate bob_correction(BellOutcome bell, PauliFrame frame) {
    return correction_gate(correction_for(frame, bell));
}

/// Receiver's correction after the sender reports `bell`. With a controller
/// outcome the pair is known exactly; without one the receiver bets on the
/// dominant branch.
inline SingleQubitGate bob_correction(BellOutcome bell, std::optional<ControllerOutcome> controller,
                                      const ChannelSpec& spec) {
    return bob_correction(bell, controller ? shared_frame(spec, *controller) : dominant_frame(spec));
}

struct CtBranch {
    ControllerOutcome controller = ControllerOutcome::First;
    BellOutcome bell = BellOutcome::PhiPlus;
    PauliFrame frame = PauliFrame::I;
    double probability = 0.0;
    PureState receiver_state = PureState::basis(1, 0);
    double fidelity = 0.0;
};

/// Every (controller outcome, sender outcome) branch of a controlled run.
/// Branches of zero probability are not listed.
struct CtRunResult {
    std::vector<CtBranch> branches;

    double total_probability() const {
        double s = 0.0;
        for (const auto& b : branches) s += b.probability;
        return s;
    }

    double min_fidelity() const {
        double m = 1.0;
        for (const auto& b : branches) m = std::min(m, b.fidelity);
        return m;
    }
};

/// Full protocol with the controller: the controller measures, the sender
/// makes a Bell measurement, the receiver corrects for both outcomes.
///
/// With `basis` empty the family's own basis and frozen correction table are
/// used. With an explicit basis the pair left after each controller outcome
/// is identified numerically; raw channels require this form.
inline CtRunResult controlled_teleport(const ChannelSpec& spec, const PureState& input,
                                       const std::optional<ControllerBasis>& basis = std::nullopt) {
    if (input.num_qubits() != 1) throw DimensionError("input must be a single qubit");
    const PureState channel = realize(spec);
    const ControllerBasis cb = basis ? *basis : controller_basis(spec);
    const PureState joint = tensor(input, channel);

    CtRunResult result;
    for (ControllerOutcome o : kControllerOutcomes) {
        const PureState& vec = o == ControllerOutcome::First ? cb.first : cb.second;
        const Projection pc = project_single_qubit(joint, kControllerQubit, vec);
        if (!pc.possible()) continue;

        PauliFrame frame;
        if (basis) {
            frame = identify_frame(*project_single_qubit(channel, 0, vec).post).frame;
        } else {
            frame = shared_frame(spec, o);
        }

        // Remaining register: input, sender, receiver.
        for (BellOutcome b : kBellOutcomes) {
            const Projection pb = project_two_qubit(*pc.post, 0, 1, bell_state(b));
            if (!pb.possible()) continue;
            PureState received = apply_gate(bob_correction(b, frame), 0, *pb.post);
            const double fid = std::clamp(std::norm(inner(input, received)), 0.0, 1.0);
            result.branches.push_back({o, b, frame, pc.probability * pb.probability, std::move(received), fid});
        }
    }
    return result;
}

inline CtRunResult controlled_teleport(const ChannelSpec& spec, const InputFamily& f,
                                       const std::optional<ControllerBasis>& basis = std::nullopt) {
    return controlled_teleport(spec, input_state(f), basis);
}

/// Receiver's view when the controller abstains.
struct NcfResult {
    DensityOperator rho3 = to_density(PureState::basis(1, 0));
    double ncf = 0.0;
    /// Corrected receiver states agree across the sender's outcomes within 1e-12.
    bool per_outcome_equal = false;
    /// Largest element-wise gap between any corrected receiver state and the first.
    double outcome_spread = 0.0;
    std::array<double, 4> outcome_probabilities{};
    PauliFrame frame = PauliFrame::I;
};

/// Threshold above which differing corrected receiver states indicate a bad correction table.
inline constexpr double kCorrectionMismatchTol = 1e-10;

/// Channel state with its no-controller correction frame, prepared once for
/// repeated evaluation.
struct PreparedChannel {
    explicit PreparedChannel(const ChannelSpec& s) : spec(s), state(realize(s)), frame(dominant_frame(s)) {}

    ChannelSpec spec;
    PureState state;
    PauliFrame frame;
};

/// Teleportation without the controller: the sender's Bell measurement, the
/// receiver's correction for the dominant branch, and the controller traced out.
inline NcfResult unconditioned_teleport(const PreparedChannel& ch, const PureState& input) {
    if (input.num_qubits() != 1) throw DimensionError("input must be a single qubit");
    const PureState joint = tensor(input, ch.state);

    NcfResult out;
    out.frame = ch.frame;
    std::vector<DensityOperator> rhos;
    std::vector<double> weights;
    rhos.reserve(4);
    weights.reserve(4);
    for (BellOutcome b : kBellOutcomes) {
        const Projection p = project_two_qubit(joint, kInputQubit, kSenderQubit, bell_state(b));
        out.outcome_probabilities[static_cast<std::size_t>(b)] = p.probability;
        if (!p.possible()) continue;
        // Remaining register: controller, receiver.
        const PureState corrected = apply_gate(bob_correction(b, ch.frame), 1, *p.post);
        rhos.push_back(partial_trace(to_density(corrected), {0}));
        weights.push_back(p.probability);
    }

    for (const auto& r : rhos) out.outcome_spread = std::max(out.outcome_spread, r.max_abs_diff(rhos.front()));
    if (out.outcome_spread > kCorrectionMismatchTol) {
        throw CorrectionMismatch("corrected receiver states differ by " + std::to_string(out.outcome_spread));
    }
    out.per_outcome_equal = out.outcome_spread <= kExactTol;

    double total = 0.0;
    for (double w : weights) total += w;
    for (double& w : weights) w /= total;
    out.rho3 = mix(weights, rhos);
    out.ncf = fidelity_with_pure(out.rho3, input);
    return out;
}

inline NcfResult unconditioned_teleport(const ChannelSpec& spec, const PureState& input) {
    return unconditioned_teleport(PreparedChannel(spec), input);
}

inline NcfResult unconditioned_teleport(const ChannelSpec& spec, const InputFamily& f) {
    return unconditioned_teleport(PreparedChannel(spec), input_state(f));
}

/// |k0|^4 + |k1|^4 + 2|d||k0|^2|k1|^2.
inline double ncf_ms_closed(Amplitude k0, Amplitude k1, double d) {
    const double p0 = std::norm(k0);
    const double p1 = std::norm(k1);
    if (std::abs(p0 + p1 - 1.0) > kInputTol) throw NormalizationError("|k0|^2 + |k1|^2 must equal 1");
    return p0 * p0 + p1 * p1 + 2.0 * std::abs(d) * p0 * p1;
}

/// a^2 + b^2 |<phi|sigma_k|phi>|^2. This is the receiver's fidelity when
/// a^2 >= b^2; otherwise the roles of a and b swap.
inline double ncf_theta_closed(double a, double b, Axis k, const InputFamily& f) {
    if (std::abs(a * a + b * b - 1.0) > kInputTol) throw NormalizationError("a^2 + b^2 must equal 1");
    const double e = std::abs(expectation(pauli(k), input_state(f)));
    return a * a + b * b * e * e;
}

}  // namespace ctpower
