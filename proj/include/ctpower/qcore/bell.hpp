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

#include "ctpower/qcore/state.hpp"

namespace ctpower {

enum class BellOutcome { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellOutcome, 4> kBellOutcomes = {BellOutcome::PhiPlus, BellOutcome::PhiMinus,
                                                             BellOutcome::PsiPlus, BellOutcome::PsiMinus};

inline constexpr std::string_view to_string(BellOutcome o) {
    switch (o) {
        case BellOutcome::PhiPlus:
            return "Phi+";
        case BellOutcome::PhiMinus:
            return "Phi-";
        case BellOutcome::PsiPlus:
            return "Psi+";
        case BellOutcome::PsiMinus:
            return "Psi-";
    }
    return "?";
}

/// Phi+- = (|00> +- |11>)/sqrt2, Psi+- = (|01> +- |10>)/sqrt2.
inline PureState bell_state(BellOutcome o) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (o) {
        case BellOutcome::PhiPlus:
            return PureState::from_amplitudes({h, 0.0, 0.0, h});
        case BellOutcome::PhiMinus:
            return PureState::from_amplitudes({h, 0.0, 0.0, -h});
        case BellOutcome::PsiPlus:
            return PureState::from_amplitudes({0.0, h, h, 0.0});
        case BellOutcome::PsiMinus:
            break;
    }
    return PureState::from_amplitudes({0.0, h, -h, 0.0});
}

}  // namespace ctpower
