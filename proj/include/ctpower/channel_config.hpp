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

#include <charconv>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "ctpower/channels.hpp"
#include "ctpower/format.hpp"

// Plain-text channel description, one `key = value` pair per line:
//
//   family = theta        # ghz | ms | theta | raw
//   a = 0.6
//   b = 0.8               # or `a2 = 0.36` instead of a/b
//   k = z
//   sigma = hermitian     # hermitian | real
//
// MS channels use `c` and `d`; raw channels list nonzero amplitudes as
// `amp.<bits> = <re> <im>` with bits written controller first.

namespace ctpower {

inline Axis parse_axis(std::string_view s) {
    if (s == "x") return Axis::X;
    if (s == "y") return Axis::Y;
    if (s == "z") return Axis::Z;
    throw ParseError("unknown axis '" + std::string(s) + "'");
}

inline PauliConvention parse_convention(std::string_view s) {
    if (s == "hermitian") return PauliConvention::Hermitian;
    if (s == "real") return PauliConvention::Real;
    throw ParseError("unknown sigma convention '" + std::string(s) + "'");
}

inline std::string_view to_string(PauliConvention c) { return c == PauliConvention::Real ? "real" : "hermitian"; }

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_double(std::string_view s) {
    s = trim(s);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError("not a number: '" + std::string(s) + "'");
    return v;
}

}  // namespace detail

inline std::string to_config(const ChannelSpec& spec) {
    std::ostringstream out;
    out << "family = " << spec.family_name() << "\n";
    std::visit(
        [&out](const auto& ch) {
            using T = std::decay_t<decltype(ch)>;
            if constexpr (std::is_same_v<T, MaximalSliceChannel>) {
                out << "c = " << format_number(ch.c) << "\n";
                out << "d = " << format_number(ch.d) << "\n";
            } else if constexpr (std::is_same_v<T, ThetaChannel>) {
                out << "a = " << format_number(ch.a) << "\n";
                out << "b = " << format_number(ch.b) << "\n";
                out << "k = " << to_string(ch.k) << "\n";
                out << "sigma = " << to_string(ch.convention) << "\n";
            } else if constexpr (std::is_same_v<T, RawChannel>) {
                for (std::size_t i = 0; i < ch.state.dim(); ++i) {
                    const Amplitude a = ch.state[i];
                    if (a == Amplitude(0.0)) continue;
                    out << "amp." << ((i >> 2) & 1) << ((i >> 1) & 1) << (i & 1) << " = " << format_number(a.real())
                        << " " << format_number(a.imag()) << "\n";
                }
            }
        },
        spec.variant());
    return out.str();
}

inline ChannelSpec parse_channel_config(std::string_view text) {
    std::map<std::string, std::string, std::less<>> kv;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("line " + std::to_string(line_no) + ": expected key = value");
        std::string key(detail::trim(line.substr(0, eq)));
        std::string value(detail::trim(line.substr(eq + 1)));
        if (key.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty key");
        if (!kv.emplace(key, value).second) throw ParseError("duplicate key '" + key + "'");
    }

    const auto take = [&kv](std::string_view key) -> std::optional<std::string> {
        const auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    const auto require = [&take](std::string_view key) {
        auto v = take(key);
        if (!v) throw ParseError("missing key '" + std::string(key) + "'");
        return *v;
    };

    const std::string family = require("family");
    std::optional<ChannelSpec> spec;
    if (family == "ghz") {
        spec = ChannelSpec::ghz();
    } else if (family == "ms") {
        const double c = detail::parse_double(require("c"));
        const double d = detail::parse_double(require("d"));
        spec = ChannelSpec::maximal_slice(c, d);
    } else if (family == "theta") {
        const Axis k = parse_axis(require("k"));
        const auto sigma = take("sigma");
        const PauliConvention conv = sigma ? parse_convention(*sigma) : PauliConvention::Hermitian;
        if (auto a2 = take("a2")) {
            spec = ChannelSpec::theta_from_a2(detail::parse_double(*a2), k, conv);
        } else {
            const double a = detail::parse_double(require("a"));
            const double b = detail::parse_double(require("b"));
            spec = ChannelSpec::theta(a, b, k, conv);
        }
    } else if (family == "raw") {
        std::vector<Amplitude> amps(8);
        for (auto it = kv.begin(); it != kv.end();) {
            const std::string_view key = it->first;
            if (key.size() != 7 || key.substr(0, 4) != "amp.") {
                ++it;
                continue;
            }
            std::size_t idx = 0;
            for (char ch : key.substr(4)) {
                if (ch != '0' && ch != '1') throw ParseError("bad amplitude key '" + std::string(key) + "'");
                idx = 2 * idx + static_cast<std::size_t>(ch - '0');
            }
            const std::string_view val = it->second;
            const auto sp = val.find_first_of(" \t");
            const double re = detail::parse_double(val.substr(0, sp));
            const double im = sp == std::string_view::npos ? 0.0 : detail::parse_double(val.substr(sp));
            amps[idx] = Amplitude(re, im);
            it = kv.erase(it);
        }
        spec = ChannelSpec::raw(PureState::from_amplitudes(std::move(amps)));
    } else {
        throw ParseError("unknown family '" + family + "'");
    }

    if (!kv.empty()) throw ParseError("unexpected key '" + kv.begin()->first + "' for family " + family);
    return *spec;
}

}  // namespace ctpower
