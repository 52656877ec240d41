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
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ctpower/errors.hpp"

namespace ctpower {

struct QuadratureOptions {
    /// Absolute error target on the integral.
    double abs_tol = 1e-9;
    unsigned max_depth = 15;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
};

/// Adaptive 15-point Gauss-Kronrod over [lo, hi]. Throws ConvergenceError when
/// the error estimate stays above the target after `max_depth` bisections.
template <class F>
QuadratureResult integrate(F&& f, double lo, double hi, const QuadratureOptions& opt = {}) {
    using boost::math::quadrature::gauss_kronrod;
    double err = 0.0;
    double l1 = 0.0;
    // Boost takes a relative tolerance and reports the Gauss/Kronrod gap in
    // units of the [-1, 1] reference interval; rescale it to [lo, hi].
    const double value = gauss_kronrod<double, 15>::integrate(f, lo, hi, opt.max_depth, 1e-12, &err, &l1);
    const double abs_err = err * std::max(1.0, std::abs(hi - lo) / 2);
    if (!std::isfinite(value) || abs_err > opt.abs_tol) {
        throw ConvergenceError("quadrature error estimate " + std::to_string(abs_err) + " above target");
    }
    return {value, abs_err};
}

/// Nested two-dimensional integral: outer over x in [x0, x1], inner over y in [y0, y1].
template <class F>
QuadratureResult integrate_2d(F&& f, double x0, double x1, double y0, double y1, const QuadratureOptions& opt = {}) {
    double worst_inner = 0.0;
    QuadratureOptions inner_opt = opt;
    inner_opt.abs_tol = opt.abs_tol / std::max(1.0, std::abs(x1 - x0));
    auto outer = [&](double x) {
        const auto r = integrate([&](double y) { return f(x, y); }, y0, y1, inner_opt);
        worst_inner = std::max(worst_inner, r.error);
        return r.value;
    };
    const auto r = integrate(outer, x0, x1, opt);
    return {r.value, r.error + worst_inner * std::abs(x1 - x0)};
}

}  // namespace ctpower
