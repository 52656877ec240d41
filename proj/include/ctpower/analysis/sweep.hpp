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
#include <exception>
#include <mutex>
#include <optional>
#include <span>
#include <string_view>
#include <thread>
#include <vector>

#include "ctpower/analysis/power.hpp"

namespace ctpower {

/// One-parameter channel family a sweep walks through.
enum class SweepFamily {
    MaximalSliceD,  // MS channel with c = sqrt(1 - d^2), parameter d
    ThetaA2,        // Theta channel with a = sqrt(a^2), parameter a^2
};

struct SweepTemplate {
    SweepFamily family = SweepFamily::MaximalSliceD;
    Axis k = Axis::Z;
    PauliConvention convention = PauliConvention::Hermitian;
    AverageMethod method = Quadrature{};
    /// Defaults to default_domain() of each channel.
    std::optional<AverageDomain> domain;

    std::string_view parameter_name() const { return family == SweepFamily::MaximalSliceD ? "d" : "a2"; }

    ChannelSpec channel_at(double x) const {
        if (family == SweepFamily::MaximalSliceD) {
            if (!std::isfinite(x) || std::abs(x) > 1.0) throw RangeError("d must lie in [-1, 1]");
            return ChannelSpec::maximal_slice(std::sqrt(std::max(0.0, 1.0 - x * x)), x);
        }
        return ChannelSpec::theta_from_a2(x, k, convention);
    }
};

struct SweepRow {
    double parameter = 0.0;
    PowerReport report;
};

/// One PowerReport per grid point, in grid order. Monte Carlo rows draw from
/// stream = row index, so the output does not depend on `threads`.
inline std::vector<SweepRow> sweep(const SweepTemplate& tmpl, std::span<const double> grid, unsigned threads = 1) {
    if (grid.empty()) throw RangeError("sweep grid is empty");
    std::vector<std::optional<SweepRow>> rows(grid.size());

    const auto run_row = [&](std::size_t i) {
        const ChannelSpec spec = tmpl.channel_at(grid[i]);
        AverageMethod method = tmpl.method;
        if (auto* mc = std::get_if<MonteCarlo>(&method)) mc->stream = i;
        const AverageDomain domain = tmpl.domain ? *tmpl.domain : default_domain(spec);
        rows[i] = SweepRow{grid[i], power_report(spec, domain, method)};
    };

    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(grid.size())));
    if (threads == 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) run_row(i);
    } else {
        std::exception_ptr failure;
        std::mutex failure_mu;
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < grid.size(); i += threads) {
                    try {
                        run_row(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mu);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
        pool.clear();
        if (failure) std::rethrow_exception(failure);
    }

    std::vector<SweepRow> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.push_back(std::move(*r));
    return out;
}

/// Parses `start:stop:step`. The point nearest `stop` (always within half a
/// step of it) is snapped onto `stop`, so both endpoints appear.
inline std::vector<double> parse_grid(std::string_view text) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw ParseError("grid must look like start:stop:step");
    const auto num = [](std::string_view s) {
        try {
            std::size_t pos = 0;
            const std::string str(s);
            const double v = std::stod(str, &pos);
            if (pos != str.size()) throw ParseError("bad grid number '" + str + "'");
            return v;
        } catch (const std::logic_error&) {
            throw ParseError("bad grid number '" + std::string(s) + "'");
        }
    };
    const double start = num(text.substr(0, c1));
    const double stop = num(text.substr(c1 + 1, c2 - c1 - 1));
    const double step = num(text.substr(c2 + 1));
    if (!(step > 0.0) || stop < start) throw RangeError("grid needs step > 0 and stop >= start");

    std::vector<double> out;
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 0.5));
    for (std::size_t i = 0; i <= n; ++i) out.push_back(i == n && n > 0 ? stop : start + static_cast<double>(i) * step);
    return out;
}

}  // namespace ctpower
