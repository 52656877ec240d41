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

#include <cstdint>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ctpower/analysis/mismatch.hpp"
#include "ctpower/analysis/power.hpp"
#include "ctpower/analysis/sweep.hpp"
#include "ctpower/channel_config.hpp"
#include "ctpower/format.hpp"

namespace ctpower {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Provenance embedded in every emitted document.
struct RunMetadata {
    std::string tool_version{kToolVersion};
    std::string command_line;
    std::uint64_t seed = 0;
};

using Cell = std::variant<double, std::string, bool, std::int64_t>;

/// Column-oriented result table rendered as CSV, JSON or aligned text.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> r) {
        if (r.size() != columns.size()) throw DimensionError("row width does not match the header");
        rows.push_back(std::move(r));
    }
};

inline std::string render_cell(const Cell& c, int digits) {
    return std::visit(
        [digits](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_number(v, digits);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else {
                return v;
            }
        },
        c);
}

/// RFC 4180 field quoting.
inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

/// Metadata as leading `#` lines, then the header and rows with 17 significant digits.
inline std::string to_csv(const Table& t, const RunMetadata& meta) {
    std::ostringstream out;
    out << "# tool: ctpower " << meta.tool_version << "\r\n";
    out << "# command: " << meta.command_line << "\r\n";
    out << "# seed: " << meta.seed << "\r\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_escape(t.columns[i]);
    out << "\r\n";
    for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_escape(render_cell(r[i], 17));
        out << "\r\n";
    }
    return out.str();
}

inline std::string to_pretty(const Table& t) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back(t.columns);
    for (const auto& r : t.rows) {
        std::vector<std::string> line;
        for (const auto& c : r) line.push_back(render_cell(c, 6));
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(t.columns.size(), 0);
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    }
    std::ostringstream out;
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            out << (i ? "  " : "") << line[i];
            if (i + 1 < line.size()) out << std::string(width[i] - line[i].size(), ' ');
        }
        out << "\n";
    }
    return out.str();
}

inline nlohmann::ordered_json to_json(const RunMetadata& meta) {
    return {{"tool", "ctpower"}, {"version", meta.tool_version}, {"command", meta.command_line}, {"seed", meta.seed}};
}

inline nlohmann::ordered_json cell_json(const Cell& c) {
    return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, c);
}

inline nlohmann::ordered_json to_json(const Table& t) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < r.size(); ++i) obj[t.columns[i]] = cell_json(r[i]);
        rows.push_back(std::move(obj));
    }
    return rows;
}

inline nlohmann::ordered_json channel_params_json(const ChannelSpec& spec) {
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    std::visit(
        [&p](const auto& ch) {
            using T = std::decay_t<decltype(ch)>;
            if constexpr (std::is_same_v<T, MaximalSliceChannel>) {
                p["c"] = ch.c;
                p["d"] = ch.d;
            } else if constexpr (std::is_same_v<T, ThetaChannel>) {
                p["a"] = ch.a;
                p["b"] = ch.b;
                p["k"] = std::string(to_string(ch.k));
                p["sigma"] = std::string(to_string(ch.convention));
            } else if constexpr (std::is_same_v<T, RawChannel>) {
                auto amps = nlohmann::ordered_json::array();
                for (const auto& a : ch.state.amplitudes()) amps.push_back({a.real(), a.imag()});
                p["amplitudes"] = std::move(amps);
            }
        },
        spec.variant());
    return p;
}

inline std::string domain_name(const AverageDomain& d) {
    if (const auto* f = std::get_if<FamilyDomain>(&d)) return std::string(to_string(f->family));
    return "sphere";
}

/// {channel, params, f_bar, c_bar, tau, bounds}
inline nlohmann::ordered_json to_json(const PowerReport& r) {
    return {{"channel", std::string(r.channel.family_name())},
            {"params", channel_params_json(r.channel)},
            {"domain", domain_name(r.domain)},
            {"f_bar", r.f_bar},
            {"f_stderr", r.f_stderr},
            {"c_bar", r.c_bar},
            {"tau", r.tau},
            {"bounds", {{"classical", r.meets_classical_bound}, {"tangle", r.meets_tangle_bound}}}};
}

/// Which value columns a sweep table carries.
struct SweepOutputs {
    bool f_bar = true;
    bool c_bar = true;
    bool tau = true;
};

inline Table sweep_table(const SweepTemplate& tmpl, const std::vector<SweepRow>& rows, SweepOutputs outputs = {}) {
    Table t;
    t.columns = {std::string(tmpl.parameter_name())};
    if (outputs.f_bar) t.columns.insert(t.columns.end(), {"f_bar", "f_stderr"});
    if (outputs.c_bar) t.columns.push_back("c_bar");
    if (outputs.tau) t.columns.push_back("tau");
    t.columns.insert(t.columns.end(), {"meets_classical_bound", "meets_tangle_bound"});
    for (const auto& r : rows) {
        std::vector<Cell> line{r.parameter};
        if (outputs.f_bar) line.insert(line.end(), {r.report.f_bar, r.report.f_stderr});
        if (outputs.c_bar) line.push_back(r.report.c_bar);
        if (outputs.tau) line.push_back(r.report.tau);
        line.insert(line.end(), {r.report.meets_classical_bound, r.report.meets_tangle_bound});
        t.add_row(std::move(line));
    }
    return t;
}

inline Table mismatch_table(const MismatchReport& rep) {
    Table t;
    t.columns = {"channel_family", "input_family", "matched", "f_bar", "f_bar_closed", "c_bar"};
    for (const auto& r : rep.rows) {
        t.add_row({std::string(to_string(r.channel_family)), std::string(to_string(r.input_family)), r.matched, r.f_bar,
                   r.f_bar_closed, r.c_bar});
    }
    return t;
}

}  // namespace ctpower
