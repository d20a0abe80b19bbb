#pragma once

// Declarative run configuration: a flat INI-style text format with the
// sections [scales], [content], [probe], [grid], [run] and optionally
// [modified].  Lines are `key = value`; `#` and `;` start comments;
// unknown sections or keys are errors with line diagnostics.  Omitted
// sections keep the defaults of default_config(); the first `species`
// line of a file replaces the default field content.  serialize_config
// emits a canonical form whose reparse reproduces the configuration
// exactly (doubles round-trip through shortest decimal form).

#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "gravnoise/deviation.hpp"
#include "gravnoise/errors.hpp"
#include "gravnoise/matter.hpp"
#include "gravnoise/modified.hpp"
#include "gravnoise/spectral.hpp"
#include "gravnoise/tidal.hpp"

namespace gravnoise {

enum class GridSpacing { Log, Linear };
enum class OutputFormat { Csv, Json };

struct GridSpec {
    double omega_min = 0.1;
    double omega_max = 10.0;
    int points = 25;
    GridSpacing spacing = GridSpacing::Log;
};

struct RunConfig {
    FieldContent content{{{SpeciesKind::Maxwell, 0.0, 1}, {SpeciesKind::Neutrino, 0.0, 3}},
                         Dimension(4)};
    PhysicalScales scales = PhysicalScales::natural();
    ProbeConfig probe{};
    GridSpec grid{};
    Channels channels = Channels::Both;
    OutputFormat format = OutputFormat::Csv;
    std::string output;  // empty = standard output
    std::uint64_t seed = 42;
    int threads = 1;
    std::optional<ModifiedGravity> modified;
};

inline RunConfig default_config() { return RunConfig{}; }

// Expand a grid specification into explicit frequencies.
inline std::vector<double> omega_grid(const GridSpec& grid) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(grid.points));
    const int n = grid.points;
    for (int i = 0; i < n; ++i) {
        const double frac = n > 1 ? static_cast<double>(i) / (n - 1) : 0.0;
        if (grid.spacing == GridSpacing::Log) {
            out.push_back(grid.omega_min *
                          std::pow(grid.omega_max / grid.omega_min, frac));
        } else {
            out.push_back(grid.omega_min + (grid.omega_max - grid.omega_min) * frac);
        }
    }
    return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] inline void config_fail(int line, const std::string& message) {
    throw ConfigError("config line " + std::to_string(line) + ": " + message);
}

inline double parse_real(std::string_view text, int line, const std::string& field) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        config_fail(line, field + ": expected a real number, got '" + std::string(text) + "'");
    return value;
}

inline std::int64_t parse_int(std::string_view text, int line, const std::string& field) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        config_fail(line, field + ": expected an integer, got '" + std::string(text) + "'");
    return value;
}

inline std::uint64_t parse_uint(std::string_view text, int line, const std::string& field) {
    std::uint64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        config_fail(line,
                    field + ": expected a non-negative integer, got '" + std::string(text) + "'");
    return value;
}

inline std::vector<std::string_view> split_fields(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

// Shortest decimal representation that round-trips to the same double.
inline std::string format_shortest(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace detail

inline std::string channels_name(Channels c) {
    switch (c) {
        case Channels::GWOnly: return "gw";
        case Channels::GravityOfVacuum: return "vacuum";
        case Channels::Both: break;
    }
    return "both";
}

inline std::string format_name(OutputFormat f) {
    return f == OutputFormat::Json ? "json" : "csv";
}

inline std::string spacing_name(GridSpacing s) {
    return s == GridSpacing::Linear ? "linear" : "log";
}

// Parse configuration text.  Unknown sections/keys, malformed values, and
// violated invariants (grid min > 0, points >= 2, v in [0,1], tau > 0, ...)
// all raise ConfigError with the offending line number.
inline RunConfig parse_config(const std::string& text) {
    RunConfig config = default_config();
    bool species_reset = false;
    bool scales_g_set = false;
    bool scales_lp2_set = false;
    double lp2_value = 0.0;
    int dimension_value = config.content.d.value();

    std::string section;
    int line_no = 0;
    std::istringstream stream(text);
    std::string raw;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (const auto hash = line.find_first_of("#;"); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                detail::config_fail(line_no, "unterminated section header");
            section = std::string(detail::trim(line.substr(1, line.size() - 2)));
            if (section != "scales" && section != "content" && section != "probe" &&
                section != "grid" && section != "run" && section != "modified")
                detail::config_fail(line_no, "unknown section [" + section + "]");
            if (section == "modified" && !config.modified) config.modified = ModifiedGravity{};
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            detail::config_fail(line_no, "expected 'key = value'");
        const std::string key(detail::trim(line.substr(0, eq)));
        const std::string_view value = detail::trim(line.substr(eq + 1));
        if (key.empty()) detail::config_fail(line_no, "empty key");
        if (value.empty()) detail::config_fail(line_no, key + ": empty value");
        if (section.empty())
            detail::config_fail(line_no, "key '" + key + "' outside any section");

        if (section == "scales") {
            if (key == "hbar") {
                config.scales.hbar = detail::parse_real(value, line_no, key);
            } else if (key == "G") {
                config.scales.G_newton = detail::parse_real(value, line_no, key);
                scales_g_set = true;
            } else if (key == "lP2") {
                lp2_value = detail::parse_real(value, line_no, key);
                scales_lp2_set = true;
            } else {
                detail::config_fail(line_no, "unknown key '" + key + "' in [scales]");
            }
        } else if (section == "content") {
            if (key == "dimension") {
                dimension_value =
                    static_cast<int>(detail::parse_int(value, line_no, key));
            } else if (key == "species") {
                const auto fields = detail::split_fields(value);
                if (fields.empty() || fields.size() > 3)
                    detail::config_fail(line_no,
                                        "species: expected 'kind [multiplicity [mass]]'");
                FieldSpecies sp;
                if (fields[0] == "scalar") sp.kind = SpeciesKind::Scalar;
                else if (fields[0] == "maxwell") sp.kind = SpeciesKind::Maxwell;
                else if (fields[0] == "neutrino") sp.kind = SpeciesKind::Neutrino;
                else
                    detail::config_fail(line_no, "species: unknown kind '" +
                                                     std::string(fields[0]) + "'");
                if (fields.size() >= 2)
                    sp.multiplicity =
                        static_cast<int>(detail::parse_int(fields[1], line_no, "multiplicity"));
                if (fields.size() >= 3)
                    sp.mass = detail::parse_real(fields[2], line_no, "mass");
                if (sp.multiplicity < 1)
                    detail::config_fail(line_no, "species: multiplicity must be >= 1");
                if (sp.mass < 0.0)
                    detail::config_fail(line_no, "species: mass must be >= 0");
                if (sp.mass > 0.0 && sp.kind != SpeciesKind::Scalar)
                    detail::config_fail(line_no, "species: only scalars may be massive");
                if (!species_reset) {
                    config.content.species.clear();
                    species_reset = true;
                }
                config.content.species.push_back(sp);
            } else {
                detail::config_fail(line_no, "unknown key '" + key + "' in [content]");
            }
        } else if (section == "probe") {
            if (key == "v") config.probe.v = detail::parse_real(value, line_no, key);
            else if (key == "tau") config.probe.tau = detail::parse_real(value, line_no, key);
            else detail::config_fail(line_no, "unknown key '" + key + "' in [probe]");
        } else if (section == "grid") {
            if (key == "omega_min")
                config.grid.omega_min = detail::parse_real(value, line_no, key);
            else if (key == "omega_max")
                config.grid.omega_max = detail::parse_real(value, line_no, key);
            else if (key == "points")
                config.grid.points = static_cast<int>(detail::parse_int(value, line_no, key));
            else if (key == "spacing") {
                if (value == "log") config.grid.spacing = GridSpacing::Log;
                else if (value == "linear") config.grid.spacing = GridSpacing::Linear;
                else detail::config_fail(line_no, "spacing: expected 'log' or 'linear'");
            } else {
                detail::config_fail(line_no, "unknown key '" + key + "' in [grid]");
            }
        } else if (section == "run") {
            if (key == "channels") {
                if (value == "gw") config.channels = Channels::GWOnly;
                else if (value == "vacuum") config.channels = Channels::GravityOfVacuum;
                else if (value == "both") config.channels = Channels::Both;
                else detail::config_fail(line_no, "channels: expected 'gw', 'vacuum' or 'both'");
            } else if (key == "format") {
                if (value == "csv") config.format = OutputFormat::Csv;
                else if (value == "json") config.format = OutputFormat::Json;
                else detail::config_fail(line_no, "format: expected 'csv' or 'json'");
            } else if (key == "output") {
                config.output = std::string(value);
            } else if (key == "seed") {
                config.seed = detail::parse_uint(value, line_no, key);
            } else if (key == "threads") {
                config.threads = static_cast<int>(detail::parse_int(value, line_no, key));
            } else {
                detail::config_fail(line_no, "unknown key '" + key + "' in [run]");
            }
        } else if (section == "modified") {
            if (key == "kappa_eff")
                config.modified->kappa_eff = detail::parse_real(value, line_no, key);
            else if (key == "delta_gamma1")
                config.modified->delta_gamma1 = detail::parse_real(value, line_no, key);
            else
                detail::config_fail(line_no, "unknown key '" + key + "' in [modified]");
        }
    }

    if (scales_g_set && scales_lp2_set)
        throw ConfigError("config: [scales] accepts G or lP2, not both");
    if (config.scales.hbar <= 0.0) throw ConfigError("config: hbar must be positive");
    if (scales_lp2_set) {
        if (lp2_value <= 0.0) throw ConfigError("config: lP2 must be positive");
        config.scales = PhysicalScales::from_planck_area(lp2_value, config.scales.hbar);
    }
    if (config.scales.G_newton <= 0.0) throw ConfigError("config: G must be positive");

    try {
        config.content.d = Dimension(dimension_value);
    } catch (const DimensionError& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    try {
        validate_content(config.content);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    try {
        validate_probe(config.probe);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (!(config.grid.omega_min > 0.0))
        throw ConfigError("config: grid omega_min must be positive");
    if (!(config.grid.omega_max >= config.grid.omega_min))
        throw ConfigError("config: grid needs omega_max >= omega_min");
    if (config.grid.points < 2) throw ConfigError("config: grid needs points >= 2");
    if (config.threads < 1) throw ConfigError("config: threads must be >= 1");
    if (config.modified && config.modified->kappa_eff <= 0.0)
        throw ConfigError("config: kappa_eff must be positive");
    return config;
}

// Canonical serialization; parse_config(serialize_config(c)) reproduces c.
inline std::string serialize_config(const RunConfig& config) {
    using detail::format_shortest;
    std::string out;
    out += "[scales]\n";
    out += "hbar = " + format_shortest(config.scales.hbar) + "\n";
    out += "G = " + format_shortest(config.scales.G_newton) + "\n";
    out += "\n[content]\n";
    out += "dimension = " + std::to_string(config.content.d.value()) + "\n";
    for (const FieldSpecies& sp : config.content.species) {
        out += "species = " + species_name(sp.kind) + " " + std::to_string(sp.multiplicity);
        if (sp.mass > 0.0) out += " " + format_shortest(sp.mass);
        out += "\n";
    }
    out += "\n[probe]\n";
    out += "v = " + format_shortest(config.probe.v) + "\n";
    out += "tau = " + format_shortest(config.probe.tau) + "\n";
    out += "\n[grid]\n";
    out += "omega_min = " + format_shortest(config.grid.omega_min) + "\n";
    out += "omega_max = " + format_shortest(config.grid.omega_max) + "\n";
    out += "points = " + std::to_string(config.grid.points) + "\n";
    out += "spacing = " + spacing_name(config.grid.spacing) + "\n";
    out += "\n[run]\n";
    out += "channels = " + channels_name(config.channels) + "\n";
    out += "format = " + format_name(config.format) + "\n";
    if (!config.output.empty()) out += "output = " + config.output + "\n";
    out += "seed = " + std::to_string(config.seed) + "\n";
    out += "threads = " + std::to_string(config.threads) + "\n";
    if (config.modified) {
        out += "\n[modified]\n";
        out += "kappa_eff = " + format_shortest(config.modified->kappa_eff) + "\n";
        out += "delta_gamma1 = " + format_shortest(config.modified->delta_gamma1) + "\n";
    }
    return out;
}

inline RunConfig load_config(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot read config file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    if (file.bad()) throw IoError("error while reading config file '" + path + "'");
    return parse_config(buffer.str());
}

}  // namespace gravnoise
