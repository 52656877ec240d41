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
#include <string_view>
#include <utility>
#include <variant>

#include "ctpower/qcore.hpp"

namespace ctpower {

/// The three great circles of the Bloch sphere an equatorial input can lie on.
enum class EquatorialFamily { XZ, XY, YZ };

inline constexpr std::array<EquatorialFamily, 3> kEquatorialFamilies = {EquatorialFamily::XZ, EquatorialFamily::XY,
                                                                        EquatorialFamily::YZ};

inline constexpr std::string_view to_string(EquatorialFamily f) {
    switch (f) {
        case EquatorialFamily::XZ:
            return "x-z";
        case EquatorialFamily::XY:
            return "x-y";
        case EquatorialFamily::YZ:
            return "y-z";
    }
    return "?";
}

/// Pauli axis normal to the family's circle, i.e. the one whose expectation
/// vanishes on every member.
inline constexpr Axis matched_axis(EquatorialFamily f) {
    switch (f) {
        case EquatorialFamily::XZ:
            return Axis::Y;
        case EquatorialFamily::XY:
            return Axis::Z;
        case EquatorialFamily::YZ:
            break;
    }
    return Axis::X;
}

inline constexpr EquatorialFamily matched_family(Axis k) {
    switch (k) {
        case Axis::X:
            return EquatorialFamily::YZ;
        case Axis::Y:
            return EquatorialFamily::XZ;
        case Axis::Z:
            break;
    }
    return EquatorialFamily::XY;
}

/// Which sigma_y the Theta constructor uses. The other two Paulis are real either way.
enum class PauliConvention { Hermitian, Real };

inline const SingleQubitGate& pauli(Axis k, PauliConvention conv) {
    return conv == PauliConvention::Real ? real_pauli(k) : pauli(k);
}

struct GhzChannel {
    bool operator==(const GhzChannel&) const = default;
};

/// Maximal slice state (|000> + c|111> + d|011>)/sqrt2.
struct MaximalSliceChannel {
    double c = 1.0;
    double d = 0.0;
    bool operator==(const MaximalSliceChannel&) const = default;
};

/// a|0>|Phi+> + b|1>(I (x) sigma_k)|Phi+>.
struct ThetaChannel {
    double a = 1.0;
    double b = 0.0;
    Axis k = Axis::Z;
    PauliConvention convention = PauliConvention::Hermitian;
    bool operator==(const ThetaChannel&) const = default;
};

struct RawChannel {
    PureState state;
    bool operator==(const RawChannel&) const = default;
};

/// A validated three-qubit channel description. Qubit 0 belongs to the
/// controller, qubit 1 to the sender, qubit 2 to the receiver.
class ChannelSpec {
   public:
    using Variant = std::variant<GhzChannel, MaximalSliceChannel, ThetaChannel, RawChannel>;

    static ChannelSpec ghz() { return ChannelSpec(GhzChannel{}); }

    static ChannelSpec maximal_slice(double c, double d) {
        check_unit_pair(c, d, "c^2 + d^2");
        return ChannelSpec(MaximalSliceChannel{c, d});
    }

    static ChannelSpec theta(double a, double b, Axis k, PauliConvention conv = PauliConvention::Hermitian) {
        check_unit_pair(a, b, "a^2 + b^2");
        return ChannelSpec(ThetaChannel{a, b, k, conv});
    }

    /// Theta channel with a = sqrt(a2), b = sqrt(1 - a2).
    static ChannelSpec theta_from_a2(double a2, Axis k, PauliConvention conv = PauliConvention::Hermitian) {
        if (!std::isfinite(a2) || a2 < 0.0 || a2 > 1.0) throw RangeError("a^2 must lie in [0, 1]");
        return ChannelSpec(ThetaChannel{std::sqrt(a2), std::sqrt(1.0 - a2), k, conv});
    }

    static ChannelSpec raw(PureState s) {
        if (s.num_qubits() != 3) throw DimensionError("raw channel must be a 3-qubit state");
        return ChannelSpec(RawChannel{std::move(s)});
    }

    const Variant& variant() const { return v_; }

    template <class T>
    const T* get_if() const {
        return std::get_if<T>(&v_);
    }

    std::string_view family_name() const {
        constexpr std::array<std::string_view, 4> names = {"ghz", "ms", "theta", "raw"};
        return names[v_.index()];
    }

    bool operator==(const ChannelSpec&) const = default;

   private:
    explicit ChannelSpec(Variant v) : v_(std::move(v)) {}

    static void check_unit_pair(double x, double y, const char* what) {
        if (!std::isfinite(x) || !std::isfinite(y)) throw NormalizationError(std::string(what) + ": non-finite parameter");
        if (std::abs(x * x + y * y - 1.0) > kInputTol) throw NormalizationError(std::string(what) + " must equal 1");
    }

    Variant v_;
};

/// (|000> + c|111> + d|011>)/sqrt2.
inline PureState ms_state(double c, double d) {
    ChannelSpec::maximal_slice(c, d);
    const double h = 1.0 / std::sqrt(2.0);
    return StateBuilder(3).add_basis(h, 0b000).add_basis(h * c, 0b111).add_basis(h * d, 0b011).build();
}

inline PureState ghz_state() { return ms_state(1.0, 0.0); }

/// Orthonormal pair a controller measures in.
struct ControllerBasis {
    PureState first;
    PureState second;
};

inline ControllerBasis computational_basis() { return {PureState::basis(1, 0), PureState::basis(1, 1)}; }

/// |x+> ~ (1+d)|0> + c|1>, |x-> ~ (1-d)|0> - c|1>. Measuring the controller
/// qubit of an MS state in this basis leaves Phi+ or Phi- on the other two.
inline ControllerBasis charlie_basis(double c, double d) {
    ChannelSpec::maximal_slice(c, d);
    const auto vec = [](double x, double y) -> PureState {
        if (x * x + y * y < kVanishingProbability) throw DegenerateBasis("controller basis vector has zero norm");
        return PureState::normalized({x, y});
    };
    return {vec(1.0 + d, c), vec(1.0 - d, -c)};
}

inline PureState theta_channel(double a, double b, Axis k, PauliConvention conv = PauliConvention::Hermitian) {
    ChannelSpec::theta(a, b, k, conv);
    const PureState phi_plus = bell_state(BellOutcome::PhiPlus);
    const PureState rotated = apply_gate(pauli(k, conv), 1, phi_plus);
    return StateBuilder(3)
        .add(a, tensor(PureState::basis(1, 0), phi_plus))
        .add(b, tensor(PureState::basis(1, 1), rotated))
        .build();
}

/// Channels matched to each equatorial family.
enum class NamedChannel {
    TetrahedralXZ,  // a|0>Phi+ + b|1>Psi-
    MsXY,           // a|0>Phi+ + b|1>Phi-
    PsiYZ,          // a|0>Phi+ + b|1>Psi+
};

inline constexpr EquatorialFamily family_of(NamedChannel n) {
    switch (n) {
        case NamedChannel::TetrahedralXZ:
            return EquatorialFamily::XZ;
        case NamedChannel::MsXY:
            return EquatorialFamily::XY;
        case NamedChannel::PsiYZ:
            break;
    }
    return EquatorialFamily::YZ;
}

/// Uses the real Pauli matrices so the singlet appears without a phase.
inline ChannelSpec named_channel(NamedChannel name, double a, double b) {
    return ChannelSpec::theta(a, b, matched_axis(family_of(name)), PauliConvention::Real);
}

inline PureState realize(const ChannelSpec& spec) {
    return std::visit(
        [](const auto& ch) -> PureState {
            using T = std::decay_t<decltype(ch)>;
            if constexpr (std::is_same_v<T, GhzChannel>) {
                return ghz_state();
            } else if constexpr (std::is_same_v<T, MaximalSliceChannel>) {
                return ms_state(ch.c, ch.d);
            } else if constexpr (std::is_same_v<T, ThetaChannel>) {
                return theta_channel(ch.a, ch.b, ch.k, ch.convention);
            } else {
                return ch.state;
            }
        },
        spec.variant());
}

/// Threshold the 3-tangle must reach for the controller to keep at least
/// the classical share of power over Theta channels.
inline constexpr double kTangleBound = 8.0 / 9.0;

struct TangleReport {
    double tau = 0.0;
    bool meets_bound = false;
};

/// Residual three-way entanglement 4|d1 - 2 d2 + 4 d3| (Cayley hyperdeterminant).
inline TangleReport three_tangle(const PureState& s) {
    if (s.num_qubits() != 3) throw DimensionError("3-tangle needs a 3-qubit state");
    const auto a = [&s](int i, int j, int k) { return s[static_cast<std::size_t>(4 * i + 2 * j + k)]; };
    const auto sq = [](Amplitude x) { return x * x; };

    const Amplitude d1 = sq(a(0, 0, 0)) * sq(a(1, 1, 1)) + sq(a(0, 0, 1)) * sq(a(1, 1, 0)) +
                         sq(a(0, 1, 0)) * sq(a(1, 0, 1)) + sq(a(1, 0, 0)) * sq(a(0, 1, 1));
    const Amplitude d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                         a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                         a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                         a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                         a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                         a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
    const Amplitude d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) + a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);

    const double tau = std::clamp(4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3), 0.0, 1.0);
    return {tau, tau >= kTangleBound - kInputTol};
}

inline TangleReport three_tangle(const ChannelSpec& spec) { return three_tangle(realize(spec)); }

}  // namespace ctpower
