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

// ctpower: command-line front end for the controlled-teleportation toolkit.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif
#include "ctpower/ctpower.hpp"
#include "ctpower/report_io.hpp"
#include "ctpower/verify.hpp"

namespace {

using namespace ctpower;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr std::uint64_t kDefaultSeed = 20140101;

/// Bad flag values detected after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ChannelArgs {
    std::string family;
    std::optional<double> c, d, a, b, a2;
    std::string k = "z";
    std::string sigma = "hermitian";
    std::string amps;
    std::string config_path;
    std::string basis = "z";

    void attach(CLI::App* app, bool required) {
        auto* fam = app->add_option("--channel", family, "Channel family")
                        ->check(CLI::IsMember({"ghz", "ms", "theta", "raw"}));
        if (required) fam->required();
        app->add_option("--c", c, "MS coefficient c");
        app->add_option("--d", d, "MS coefficient d");
        app->add_option("--a", a, "Theta weight a");
        app->add_option("--b", b, "Theta weight b");
        app->add_option("--a2", a2, "Theta weight a^2 (b = sqrt(1 - a^2))");
        app->add_option("--k", k, "Theta Pauli axis")->check(CLI::IsMember({"x", "y", "z"}));
        app->add_option("--sigma", sigma, "sigma_y convention")->check(CLI::IsMember({"hermitian", "real"}));
        app->add_option("--amps", amps, "Raw channel amplitudes: 8 entries re[:im] separated by commas");
        app->add_option("--channel-config", config_path, "Read the channel from a key = value file");
        app->add_option("--basis", basis, "Controller basis for raw channels")->check(CLI::IsMember({"z", "x"}));
    }

    bool given() const { return !family.empty() || !config_path.empty(); }

    ChannelSpec build() const {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw UsageError("cannot read " + config_path);
            std::stringstream ss;
            ss << in.rdbuf();
            return parse_channel_config(ss.str());
        }
        const Axis axis = parse_axis(k);
        const PauliConvention conv = parse_convention(sigma);
        if (family == "ghz") return ChannelSpec::ghz();
        if (family == "ms") {
            if (c && d) return ChannelSpec::maximal_slice(*c, *d);
            if (d) {
                if (std::abs(*d) > 1.0) throw RangeError("|d| must not exceed 1");
                return ChannelSpec::maximal_slice(std::sqrt(1.0 - *d * *d), *d);
            }
            if (c) {
                if (*c < 0.0 || *c > 1.0) throw RangeError("c must lie in [0, 1]");
                return ChannelSpec::maximal_slice(*c, std::sqrt(1.0 - *c * *c));
            }
            throw UsageError("ms channel needs --c and/or --d");
        }
        if (family == "theta") {
            if (a2) return ChannelSpec::theta_from_a2(*a2, axis, conv);
            if (a && b) return ChannelSpec::theta(*a, *b, axis, conv);
            throw UsageError("theta channel needs --a2 or both --a and --b");
        }
        if (family == "raw") return ChannelSpec::raw(PureState::from_amplitudes(parse_amps(amps)));
        throw UsageError("missing --channel");
    }

    std::optional<ControllerBasis> controller_basis_override(const ChannelSpec& spec) const {
        if (!spec.get_if<RawChannel>()) return std::nullopt;
        if (basis == "x") {
            const double h = 1.0 / std::sqrt(2.0);
            return ControllerBasis{make_qubit(h, h), make_qubit(h, -h)};
        }
        return computational_basis();
    }

    static std::vector<Amplitude> parse_amps(const std::string& text) {
        std::vector<Amplitude> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto colon = item.find(':');
            try {
                const double re = std::stod(item.substr(0, colon));
                const double im = colon == std::string::npos ? 0.0 : std::stod(item.substr(colon + 1));
                out.emplace_back(re, im);
            } catch (const std::logic_error&) {
                throw UsageError("bad amplitude '" + item + "'");
            }
        }
        if (out.size() != 8) throw UsageError("--amps needs exactly 8 entries");
        return out;
    }
};

struct InputArgs {
    std::string family = "arbitrary";
    double theta = 0.0;
    double phi = 0.0;

    void attach(CLI::App* app) {
        app->add_option("--input", family, "Input family")->check(CLI::IsMember({"arbitrary", "xz", "xy", "yz"}));
        app->add_option("--theta", theta, "Polar (arbitrary) or circle (xz, yz) angle, radians");
        app->add_option("--phi", phi, "Azimuth (arbitrary, xy), radians");
    }

    InputFamily build() const {
        if (family == "xz") return InputFamily::xz(theta);
        if (family == "xy") return InputFamily::xy(phi);
        if (family == "yz") return InputFamily::yz(theta);
        return InputFamily::arbitrary(theta, phi);
    }
};

struct MethodArgs {
    std::string method = "quadrature";
    std::uint64_t samples = 1'000'000;
    std::string domain;

    void attach(CLI::App* app) {
        app->add_option("--method", method, "Averaging method")->check(CLI::IsMember({"quadrature", "monte-carlo"}));
        app->add_option("--samples", samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
        app->add_option("--domain", domain, "Average over the sphere or an equatorial circle")
            ->check(CLI::IsMember({"sphere", "xz", "xy", "yz"}));
    }

    AverageMethod build(std::uint64_t seed) const {
        if (method == "monte-carlo") return MonteCarlo{samples, seed, 0};
        return Quadrature{};
    }

    std::optional<AverageDomain> build_domain() const {
        if (domain.empty()) return std::nullopt;
        if (domain == "sphere") return SphereDomain{};
        if (domain == "xz") return FamilyDomain{EquatorialFamily::XZ};
        if (domain == "xy") return FamilyDomain{EquatorialFamily::XY};
        return FamilyDomain{EquatorialFamily::YZ};
    }
};

struct Common {
    std::string format = "pretty";
    std::string output;
    std::optional<std::uint64_t> seed;
    RunMetadata meta;

    void attach(CLI::App* app) {
        app->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json", "pretty"}));
        app->add_option("--output,-o", output, "Write to this file instead of stdout");
        app->add_option("--seed", seed, "RNG seed (default: $CTPOWER_SEED or 20140101)");
    }

    std::uint64_t resolved_seed() const {
        if (seed) return *seed;
        if (const char* env = std::getenv("CTPOWER_SEED")) {
            try {
                return std::stoull(env);
            } catch (const std::logic_error&) {
                throw UsageError(std::string("CTPOWER_SEED is not an integer: ") + env);
            }
        }
        return kDefaultSeed;
    }

    void emit(const std::string& text) const {
        if (output.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(output, std::ios::binary);
        if (!out) throw UsageError("cannot write " + output);
        out << text;
    }

    std::string pretty_header() const {
        return "# ctpower " + meta.tool_version + " | " + meta.command_line + " | seed " + std::to_string(meta.seed) + "\n";
    }

    /// Emits a table in the selected format with `extra` merged into the JSON document.
    void emit_table(const Table& t, nlohmann::ordered_json extra = nlohmann::ordered_json::object(),
                    const std::string& pretty_tail = {}) const {
        if (format == "csv") {
            emit(to_csv(t, meta));
        } else if (format == "json") {
            nlohmann::ordered_json doc = {{"meta", to_json(meta)}};
            for (auto& [k, v] : extra.items()) doc[k] = v;
            doc["rows"] = to_json(t);
            emit(doc.dump(2) + "\n");
        } else {
            emit(pretty_header() + to_pretty(t) + pretty_tail);
        }
    }
};

std::string basis_label(std::size_t i) {
    return std::string{static_cast<char>('0' + ((i >> 2) & 1)), static_cast<char>('0' + ((i >> 1) & 1)),
                       static_cast<char>('0' + (i & 1))};
}

int cmd_channel(const Common& common, const ChannelArgs& ch) {
    if (!ch.given()) throw UsageError("channel needs a family or --channel-config");
    const ChannelSpec spec = ch.build();
    const PureState s = realize(spec);
    const TangleReport t = three_tangle(s);

    Table table;
    table.columns = {"basis", "re", "im"};
    for (std::size_t i = 0; i < s.dim(); ++i) table.add_row({basis_label(i), s[i].real(), s[i].imag()});

    if (common.format == "csv") {
        Table summary;
        summary.columns = {"family", "tau", "meets_tangle_bound"};
        for (std::size_t i = 0; i < s.dim(); ++i) {
            summary.columns.push_back("amp_" + basis_label(i) + "_re");
            summary.columns.push_back("amp_" + basis_label(i) + "_im");
        }
        std::vector<Cell> row{std::string(spec.family_name()), t.tau, t.meets_bound};
        for (std::size_t i = 0; i < s.dim(); ++i) {
            row.emplace_back(s[i].real());
            row.emplace_back(s[i].imag());
        }
        summary.add_row(std::move(row));
        common.emit(to_csv(summary, common.meta));
        return kExitOk;
    }
    nlohmann::ordered_json extra = {{"channel", std::string(spec.family_name())},
                                    {"params", channel_params_json(spec)},
                                    {"tau", t.tau},
                                    {"meets_tangle_bound", t.meets_bound}};
    const std::string tail = "family: " + std::string(spec.family_name()) + "\ntau=" + format_number(t.tau, 6) +
                             "\nmeets_tangle_bound=" + (t.meets_bound ? "true" : "false") + "\n";
    common.emit_table(table, extra, tail);
    return kExitOk;
}

int cmd_ct(const Common& common, const ChannelArgs& ch, const InputArgs& in) {
    const ChannelSpec spec = ch.build();
    const CtRunResult r = controlled_teleport(spec, in.build(), ch.controller_basis_override(spec));

    constexpr std::array<std::string_view, 4> frames = {"I", "X", "Y", "Z"};
    Table table;
    table.columns = {"controller", "bell", "frame", "probability", "fidelity"};
    for (const auto& b : r.branches) {
        table.add_row({std::string(to_string(b.controller)), std::string(to_string(b.bell)),
                       std::string(frames[static_cast<std::size_t>(b.frame)]), b.probability, b.fidelity});
    }
    const bool ok = r.min_fidelity() >= 1.0 - 1e-9;
    nlohmann::ordered_json extra = {{"channel", std::string(spec.family_name())},
                                    {"params", channel_params_json(spec)},
                                    {"total_probability", r.total_probability()},
                                    {"min_fidelity", r.min_fidelity()},
                                    {"perfect", ok}};
    const std::string tail = "total_probability=" + format_number(r.total_probability(), 6) +
                             " min_fidelity=" + format_number(r.min_fidelity(), 6) + "\n";
    common.emit_table(table, extra, tail);
    return ok ? kExitOk : kExitFailed;
}

int cmd_ncf(const Common& common, const ChannelArgs& ch, const InputArgs& in) {
    const ChannelSpec spec = ch.build();
    const InputFamily family = in.build();
    const PureState phi = input_state(family);
    const NcfResult r = unconditioned_teleport(spec, phi);

    std::optional<double> closed;
    if (spec.get_if<GhzChannel>()) closed = ncf_ms_closed(phi[0], phi[1], 0.0);
    if (const auto* ms = spec.get_if<MaximalSliceChannel>()) closed = ncf_ms_closed(phi[0], phi[1], ms->d);
    if (const auto* th = spec.get_if<ThetaChannel>()) {
        // The closed form puts the larger weight first.
        const double hi = std::max(th->a, th->b);
        const double lo = std::min(th->a, th->b);
        closed = ncf_theta_closed(hi, lo, th->k, family);
    }

    Table table;
    table.columns = {"ncf", "control_power", "closed_form", "per_outcome_equal", "rho_00", "rho_01_re", "rho_01_im",
                     "rho_11"};
    table.add_row({r.ncf, control_power(r.ncf), closed ? Cell{*closed} : Cell{std::string("")}, r.per_outcome_equal,
                   r.rho3(0, 0).real(), r.rho3(0, 1).real(), r.rho3(0, 1).imag(), r.rho3(1, 1).real()});
    nlohmann::ordered_json extra = {{"channel", std::string(spec.family_name())},
                                    {"params", channel_params_json(spec)},
                                    {"outcome_probabilities", r.outcome_probabilities}};
    common.emit_table(table, extra);
    return kExitOk;
}

int cmd_avg(const Common& common, const ChannelArgs& ch, const MethodArgs& m) {
    const ChannelSpec spec = ch.build();
    const AverageDomain domain = m.build_domain().value_or(default_domain(spec));
    const PowerReport r = power_report(spec, domain, m.build(common.meta.seed));

    std::optional<double> analytic;
    if (std::holds_alternative<SphereDomain>(domain)) {
        if (spec.get_if<GhzChannel>()) analytic = avg_fidelity_ms_analytic(0.0);
        if (const auto* ms = spec.get_if<MaximalSliceChannel>()) analytic = avg_fidelity_ms_analytic(ms->d);
    }

    Table table;
    table.columns = {"domain", "method", "f_bar", "f_stderr", "c_bar", "tau", "meets_classical_bound",
                     "meets_tangle_bound", "analytic_f_bar"};
    table.add_row({domain_name(domain), m.method, r.f_bar, r.f_stderr, r.c_bar, r.tau, r.meets_classical_bound,
                   r.meets_tangle_bound, analytic ? Cell{*analytic} : Cell{std::string("")}});
    if (common.format == "json") {
        nlohmann::ordered_json doc = {{"meta", to_json(common.meta)}, {"report", to_json(r)}, {"method", m.method}};
        if (analytic) doc["analytic_f_bar"] = *analytic;
        common.emit(doc.dump(2) + "\n");
        return kExitOk;
    }
    common.emit_table(table);
    return kExitOk;
}

struct SweepArgs {
    std::string d_grid;
    std::string a2_grid;
    std::string outputs = "f_bar,c_bar,tau";
    unsigned threads = 1;

    void attach(CLI::App* app) {
        app->add_option("--d-grid", d_grid, "MS sweep over d, start:stop:step");
        app->add_option("--a2-grid", a2_grid, "Theta sweep over a^2, start:stop:step");
        app->add_option("--outputs", outputs, "Comma-separated subset of f_bar,c_bar,tau");
        app->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    }
};

int cmd_sweep(const Common& common, const ChannelArgs& ch, const MethodArgs& m, const SweepArgs& s) {
    SweepTemplate tmpl;
    std::vector<double> grid;
    if (ch.family == "ms") {
        if (s.d_grid.empty()) throw UsageError("ms sweep needs --d-grid");
        tmpl.family = SweepFamily::MaximalSliceD;
        grid = parse_grid(s.d_grid);
    } else if (ch.family == "theta") {
        if (s.a2_grid.empty()) throw UsageError("theta sweep needs --a2-grid");
        tmpl.family = SweepFamily::ThetaA2;
        tmpl.k = parse_axis(ch.k);
        tmpl.convention = parse_convention(ch.sigma);
        grid = parse_grid(s.a2_grid);
    } else {
        throw UsageError("power-sweep supports --channel ms or theta");
    }
    tmpl.method = m.build(common.meta.seed);
    tmpl.domain = m.build_domain();

    SweepOutputs outs{false, false, false};
    std::stringstream ss(s.outputs);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "f_bar") {
            outs.f_bar = true;
        } else if (item == "c_bar") {
            outs.c_bar = true;
        } else if (item == "tau") {
            outs.tau = true;
        } else {
            throw UsageError("unknown output column '" + item + "'");
        }
    }

    const auto rows = sweep(tmpl, grid, s.threads);
    if (common.format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            auto obj = to_json(r.report);
            obj["parameter"] = {{std::string(tmpl.parameter_name()), r.parameter}};
            arr.push_back(std::move(obj));
        }
        nlohmann::ordered_json doc = {{"meta", to_json(common.meta)}, {"rows", std::move(arr)}};
        common.emit(doc.dump(2) + "\n");
        return kExitOk;
    }
    common.emit_table(sweep_table(tmpl, rows, outs));
    return kExitOk;
}

int cmd_mismatch(const Common& common, std::optional<double> a2, std::optional<double> a, std::optional<double> b) {
    double wa = 0.0;
    double wb = 0.0;
    if (a2) {
        if (*a2 < 0.0 || *a2 > 1.0) throw RangeError("a^2 must lie in [0, 1]");
        wa = std::sqrt(*a2);
        wb = std::sqrt(1.0 - *a2);
    } else if (a && b) {
        wa = *a;
        wb = *b;
    } else {
        throw UsageError("mismatch needs --a2 or both --a and --b");
    }
    const MismatchReport rep = mismatch_report(wa, wb);
    const auto& chk = rep.equal_weight_check;
    nlohmann::ordered_json extra = {
        {"a", rep.a},
        {"b", rep.b},
        {"equal_weight_check",
         {{"max_mismatched_c_bar", chk.max_mismatched_c_bar}, {"expected", chk.expected}, {"agrees", chk.agrees}}}};
    const std::string tail = "equal-weight mismatched max c_bar=" + format_number(chk.max_mismatched_c_bar, 6) +
                             " vs classical 1/3: " + (chk.agrees ? "agrees" : "disagrees") + "\n";
    common.emit_table(mismatch_table(rep), extra, tail);
    return kExitOk;
}

int cmd_verify(const Common& common, const ChannelArgs& ch, bool quick) {
    VerifyOptions opt;
    opt.seed = common.meta.seed;
    opt.quick = quick;
    if (ch.given()) {
        opt.extra_channel = ch.build();
        opt.extra_basis = ch.controller_basis_override(*opt.extra_channel);
    }
    const auto results = run_verification(opt);
    if (common.format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        }
        nlohmann::ordered_json doc = {
            {"meta", to_json(common.meta)}, {"quick", quick}, {"checks", std::move(arr)}, {"passed", all_passed(results)}};
        common.emit(doc.dump(2) + "\n");
    } else if (common.format == "csv") {
        Table t;
        t.columns = {"id", "name", "passed", "detail"};
        for (const auto& r : results) t.add_row({std::int64_t{r.id}, r.name, r.passed, r.detail});
        common.emit(to_csv(t, common.meta));
    } else {
        common.emit(common.pretty_header() + render_verification(results, common.meta.seed, quick));
    }
    return all_passed(results) ? kExitOk : kExitFailed;
}

/// Expands `--args-from FILE` into one argument per non-empty line; lines
/// holding `--flag value` are split at the first space.
std::vector<std::string> expand_args(int argc, char** argv) {
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg != "--args-from") {
            out.push_back(arg);
            continue;
        }
        if (i + 1 >= argc) throw UsageError("--args-from needs a file");
        std::ifstream in(argv[++i]);
        if (!in) throw UsageError(std::string("cannot read ") + argv[i]);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const auto b = line.find_first_not_of(" \t");
            if (b == std::string::npos || line[b] == '#') continue;
            line = line.substr(b, line.find_last_not_of(" \t") - b + 1);
            const auto sp = line.find(' ');
            if (line.rfind("--", 0) == 0 && sp != std::string::npos) {
                out.push_back(line.substr(0, sp));
                out.push_back(line.substr(line.find_first_not_of(' ', sp)));
            } else {
                out.push_back(line);
            }
        }
    }
    return out;
}

std::string join_command(int argc, char** argv) {
    std::string s = "ctpower";
    for (int i = 1; i < argc; ++i) s += std::string(" ") + argv[i];
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Controlled teleportation: fidelities and control power over three-qubit channels"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    Common common;
    ChannelArgs ch;
    InputArgs in;
    MethodArgs method;
    SweepArgs sweep_args;
    std::optional<double> mm_a2, mm_a, mm_b;
    bool quick = false;

    auto* channel = app.add_subcommand("channel", "Print a channel state and its 3-tangle");
    ch.attach(channel, false);
    channel->add_option("family", ch.family, "Channel family (same as --channel)")
        ->check(CLI::IsMember({"ghz", "ms", "theta", "raw"}));
    common.attach(channel);

    auto* ct = app.add_subcommand("ct", "Run the protocol with the controller, branch by branch");
    ch.attach(ct, true);
    in.attach(ct);
    common.attach(ct);

    auto* ncf = app.add_subcommand("ncf", "Non-conditioned fidelity of one input");
    ch.attach(ncf, true);
    in.attach(ncf);
    common.attach(ncf);

    auto* avg = app.add_subcommand("avg", "Average non-conditioned fidelity and control power");
    ch.attach(avg, true);
    method.attach(avg);
    common.attach(avg);

    auto* sweep_cmd = app.add_subcommand("power-sweep", "Control power across a channel parameter grid");
    ch.attach(sweep_cmd, true);
    method.attach(sweep_cmd);
    sweep_args.attach(sweep_cmd);
    common.attach(sweep_cmd);

    auto* mismatch = app.add_subcommand("mismatch", "Theta channels used on the wrong equatorial family");
    mismatch->add_option("--a2", mm_a2, "Channel weight a^2");
    mismatch->add_option("--a", mm_a, "Channel weight a");
    mismatch->add_option("--b", mm_b, "Channel weight b");
    common.attach(mismatch);

    auto* verify = app.add_subcommand("verify", "Run the reproduction checks");
    verify->add_flag("--quick", quick, "Skip the Monte Carlo estimates");
    ch.attach(verify, false);
    common.attach(verify);

    try {
        std::vector<std::string> args = expand_args(argc, argv);
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        common.meta.command_line = join_command(argc, argv);
        common.meta.seed = common.resolved_seed();

        if (*channel) return cmd_channel(common, ch);
        if (*ct) return cmd_ct(common, ch, in);
        if (*ncf) return cmd_ncf(common, ch, in);
        if (*avg) return cmd_avg(common, ch, method);
        if (*sweep_cmd) return cmd_sweep(common, ch, method, sweep_args);
        if (*mismatch) return cmd_mismatch(common, mm_a2, mm_a, mm_b);
        if (*verify) return cmd_verify(common, ch, quick);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NormalizationError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RangeError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DimensionError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DegenerateBasis& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
    return kExitUsage;
}
