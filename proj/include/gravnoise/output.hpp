#pragma once

// Emission of results as CSV and JSON: the deviation-spectrum table, the
// per-species coefficient table, and text-file output with I/O error
// mapping.  All numeric output is locale-independent; floating-point
// values are printed in scientific notation with 17 significant digits,
// which round-trips doubles exactly.

#include <charconv>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gravnoise/config.hpp"
#include "gravnoise/deviation.hpp"
#include "gravnoise/errors.hpp"
#include "gravnoise/matter.hpp"
#include "gravnoise/version.hpp"

namespace gravnoise {

// Scientific notation with 16 fractional digits = 17 significant digits.
inline std::string format_double_17(double value) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::scientific, 16);
    (void)ec;
    return std::string(buf, ptr);
}

inline constexpr const char* spectrum_csv_header =
    "omega,C_d33,C_d13,C_d23,C_d12,C_d12p,C_trace";

inline void write_spectrum_csv(std::ostream& os, const DeviationSpectrum& spectrum) {
    os << spectrum_csv_header << "\n";
    for (std::size_t i = 0; i < spectrum.omega.size(); ++i) {
        os << format_double_17(spectrum.omega[i]) << ',' << format_double_17(spectrum.c33[i])
           << ',' << format_double_17(spectrum.c13[i]) << ','
           << format_double_17(spectrum.c23[i]) << ',' << format_double_17(spectrum.c12[i])
           << ',' << format_double_17(spectrum.c12p[i]) << ','
           << format_double_17(spectrum.trace[i]) << "\n";
    }
}

inline nlohmann::json run_metadata(const RunConfig& config) {
    nlohmann::json meta;
    meta["generator"] = "gravnoise";
    meta["version"] = version_string;
    meta["channels"] = channels_name(config.channels);
    meta["seed"] = config.seed;
    meta["threads"] = config.threads;
    meta["config"] = serialize_config(config);
    return meta;
}

inline nlohmann::json spectrum_json(const DeviationSpectrum& spectrum,
                                    const RunConfig& config) {
    nlohmann::json doc;
    doc["metadata"] = run_metadata(config);
    doc["columns"] = {"omega", "C_d33", "C_d13", "C_d23", "C_d12", "C_d12p", "C_trace"};
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < spectrum.omega.size(); ++i) {
        rows.push_back({spectrum.omega[i], spectrum.c33[i], spectrum.c13[i], spectrum.c23[i],
                        spectrum.c12[i], spectrum.c12p[i], spectrum.trace[i]});
    }
    doc["rows"] = rows;
    return doc;
}

// One row of the coefficient table.  Exact values are rational multiples
// of a power of pi; for a massive scalar they are the high-energy limit
// (the support starts at k^2 = 4 mu^2), which the note records.
struct CoefficientRow {
    std::string species;
    int multiplicity = 0;
    double mass = 0.0;
    std::string zeta0_exact;
    double zeta0 = 0.0;
    std::string zeta1_exact;
    double zeta1 = 0.0;
    std::string note;
};

inline ExactChannel species_zeta_exact(SpeciesKind kind, Dimension d) {
    switch (kind) {
        case SpeciesKind::Maxwell: return zeta_maxwell_exact(d);
        case SpeciesKind::Neutrino: return zeta_neutrino_exact(d);
        case SpeciesKind::Scalar: break;
    }
    return zeta_scalar_massless_exact(d);
}

inline std::vector<CoefficientRow> coefficient_table(const FieldContent& content) {
    validate_content(content);
    const Dimension d = content.d;
    std::vector<CoefficientRow> rows;
    ExactChannel total{PiPower(), PiPower()};
    bool any_massive = false;
    for (const FieldSpecies& sp : content.species) {
        const ExactChannel z = species_zeta_exact(sp.kind, d);
        CoefficientRow row;
        row.species = species_name(sp.kind);
        row.multiplicity = sp.multiplicity;
        row.mass = sp.mass;
        row.zeta0_exact = z.c0.str();
        row.zeta0 = z.c0.value();
        row.zeta1_exact = z.c1.str();
        row.zeta1 = z.c1.value();
        if (sp.mass > 0.0) {
            row.note = "massive: values are the k^2 -> infinity limit; support above k^2 = 4 mu^2";
            any_massive = true;
        } else if (d.value() == 2 && sp.kind == SpeciesKind::Scalar) {
            row.note = "anomaly: adds a lightcone k k k k term at d = 2";
        }
        rows.push_back(row);
        for (int copy = 0; copy < sp.multiplicity; ++copy) {
            total.c0 = total.c0 + z.c0;
            total.c1 = total.c1 + z.c1;
        }
    }
    CoefficientRow agg;
    agg.species = "total";
    agg.multiplicity = 0;
    agg.zeta0_exact = total.c0.str();
    agg.zeta0 = total.c0.value();
    agg.zeta1_exact = total.c1.str();
    agg.zeta1 = total.c1.value();
    if (any_massive) agg.note = "total over massless limits";
    rows.push_back(agg);
    return rows;
}

inline constexpr const char* coefficients_csv_header =
    "species,multiplicity,mass,zeta0_exact,zeta0,zeta1_exact,zeta1,note";

inline void write_coefficients_csv(std::ostream& os, const std::vector<CoefficientRow>& rows) {
    os << coefficients_csv_header << "\n";
    for (const CoefficientRow& row : rows) {
        os << row.species << ',';
        if (row.multiplicity > 0) os << row.multiplicity;
        os << ',';
        if (row.mass > 0.0) os << format_double_17(row.mass);
        os << ',' << row.zeta0_exact << ',' << format_double_17(row.zeta0) << ','
           << row.zeta1_exact << ',' << format_double_17(row.zeta1) << ',' << row.note << "\n";
    }
}

inline nlohmann::json coefficients_json(const std::vector<CoefficientRow>& rows,
                                        const RunConfig& config) {
    nlohmann::json doc;
    doc["metadata"] = run_metadata(config);
    nlohmann::json out_rows = nlohmann::json::array();
    for (const CoefficientRow& row : rows) {
        nlohmann::json r;
        r["species"] = row.species;
        if (row.multiplicity > 0) r["multiplicity"] = row.multiplicity;
        if (row.mass > 0.0) r["mass"] = row.mass;
        r["zeta0_exact"] = row.zeta0_exact;
        r["zeta0"] = row.zeta0;
        r["zeta1_exact"] = row.zeta1_exact;
        r["zeta1"] = row.zeta1;
        if (!row.note.empty()) r["note"] = row.note;
        out_rows.push_back(r);
    }
    doc["rows"] = out_rows;
    return doc;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file.write(content.data(), static_cast<std::streamsize>(content.size()));
    file.flush();
    if (!file) throw IoError("error while writing '" + path + "'");
}

}  // namespace gravnoise
