// gravnoise command-line front end.
//
// Subcommands:
//   coefficients  per-species and aggregate channel weights (exact + float)
//   spectrum      geodesic-deviation noise spectra over an omega grid
//   validate      seeded invariant suite, machine-readable JSON report
//   eddington     Eddington parameter and point-mass metric coefficients
//
// Exit codes: 0 success, 1 validation failure, 2 config/usage error,
//             3 I/O error, 4 numerical failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gravnoise/gravnoise.hpp"

namespace {

struct CliOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> threads;
    std::optional<std::string> format;
    std::optional<std::string> output;
    double zeta_perturbation = 0.0;  // hidden fault-injection hook (validate)
};

void add_common_flags(CLI::App* sub, CliOptions& cli) {
    sub->add_option("--config", cli.config_path, "Run configuration file");
    sub->add_option("--seed", cli.seed, "Validation random seed");
    sub->add_option("--threads", cli.threads, "Worker threads for grid evaluation");
    sub->add_option("--format", cli.format, "Output format: csv | json");
    sub->add_option("--output", cli.output, "Output path (default: stdout)");
}

// Assemble the effective run configuration with the documented precedence:
// command-line flag > environment variable > config file.  Environment
// overrides exist for the output path and the thread count only.
gravnoise::RunConfig effective_config(const CliOptions& cli) {
    gravnoise::RunConfig config = cli.config_path.empty()
                                      ? gravnoise::default_config()
                                      : gravnoise::load_config(cli.config_path);

    if (const char* env = std::getenv("GRAVNOISE_OUTPUT")) config.output = env;
    if (const char* env = std::getenv("GRAVNOISE_THREADS")) {
        try {
            config.threads =
                static_cast<int>(gravnoise::detail::parse_int(env, 0, "GRAVNOISE_THREADS"));
        } catch (const gravnoise::ConfigError&) {
            throw gravnoise::ConfigError("GRAVNOISE_THREADS: not an integer");
        }
    }

    if (cli.output) config.output = *cli.output;
    if (cli.threads) config.threads = *cli.threads;
    if (cli.seed) config.seed = *cli.seed;
    if (cli.format) {
        if (*cli.format == "csv") {
            config.format = gravnoise::OutputFormat::Csv;
        } else if (*cli.format == "json") {
            config.format = gravnoise::OutputFormat::Json;
        } else {
            throw gravnoise::ConfigError("--format: expected csv or json");
        }
    }
    if (config.threads < 1) throw gravnoise::ConfigError("threads: must be >= 1");
    return config;
}

// All emitters assemble the full text first and only then touch the output
// stream, so a failure mid-computation never leaves partial output behind.
void emit(const gravnoise::RunConfig& config, const std::string& text) {
    if (config.output.empty()) {
        std::cout << text;
        std::cout.flush();
    } else {
        gravnoise::write_text_file(config.output, text);
    }
}

int cmd_coefficients(const gravnoise::RunConfig& config) {
    const std::vector<gravnoise::CoefficientRow> table =
        gravnoise::coefficient_table(config.content);
    std::string text;
    if (config.format == gravnoise::OutputFormat::Csv) {
        std::ostringstream out;
        gravnoise::write_coefficients_csv(out, table);
        text = out.str();
    } else {
        text = gravnoise::coefficients_json(table, config).dump(2) + "\n";
    }
    emit(config, text);
    return 0;
}

int cmd_spectrum(const gravnoise::RunConfig& config) {
    if (!gravnoise::content_massless(config.content)) {
        throw gravnoise::ConfigError(
            "spectrum: massive species are not supported by the deviation "
            "pipeline (power-law spectral terms only)");
    }
    const std::vector<double> grid = gravnoise::omega_grid(config.grid);
    const gravnoise::DeviationSpectrum dev =
        gravnoise::deviation_spectrum(config.probe, config.content, config.scales, grid,
                                      config.channels, config.threads);
    std::string text;
    if (config.format == gravnoise::OutputFormat::Csv) {
        std::ostringstream out;
        gravnoise::write_spectrum_csv(out, dev);
        text = out.str();
    } else {
        text = gravnoise::spectrum_json(dev, config).dump(2) + "\n";
    }
    emit(config, text);
    return 0;
}

int cmd_validate(const gravnoise::RunConfig& config, double zeta_perturbation) {
    gravnoise::ValidationOptions options;
    options.seed = config.seed;
    options.threads = config.threads;
    options.zeta_perturbation = zeta_perturbation;
    const gravnoise::ValidationReport report = gravnoise::run_validation(config, options);
    // The report is machine-readable JSON regardless of --format.
    emit(config, gravnoise::validation_report_json(report).dump(2) + "\n");
    return report.all_pass() ? 0 : 1;
}

int cmd_eddington(const gravnoise::RunConfig& config) {
    if (!config.modified) {
        throw gravnoise::ConfigError("eddington: requires a [modified] config block");
    }
    if (config.content.d.value() != 4) {
        throw gravnoise::ConfigError("eddington: requires dimension = 4");
    }
    const gravnoise::ModifiedGravity& mod = *config.modified;
    const double gamma = gravnoise::eddington_gamma(mod);
    // Momentum-space coefficients at unit mass and unit spatial momentum.
    const gravnoise::PointMassCoefficients pm =
        gravnoise::point_mass_metric(mod, 1.0, gravnoise::Momentum{0.0, 1.0, 0.0, 0.0});

    std::string text;
    if (config.format == gravnoise::OutputFormat::Csv) {
        text = "gamma,h00,hii\n" + gravnoise::format_double_17(gamma) + "," +
               gravnoise::format_double_17(pm.h00) + "," +
               gravnoise::format_double_17(pm.hii) + "\n";
    } else {
        nlohmann::json doc;
        doc["kappa_eff"] = mod.kappa_eff;
        doc["delta_gamma1"] = mod.delta_gamma1;
        doc["gamma"] = gamma;
        doc["h00"] = pm.h00;
        doc["hii"] = pm.hii;
        doc["reference"] = "unit mass, unit spatial momentum, k0 = 0";
        text = doc.dump(2) + "\n";
    }
    emit(config, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vacuum curvature-noise spectra in linearized gravity"};
    app.require_subcommand(1);

    CliOptions cli;
    CLI::App* coefficients =
        app.add_subcommand("coefficients", "Channel-weight table per species");
    CLI::App* spectrum =
        app.add_subcommand("spectrum", "Geodesic-deviation noise spectra");
    CLI::App* validate = app.add_subcommand("validate", "Seeded invariant suite");
    CLI::App* eddington =
        app.add_subcommand("eddington", "Eddington parameter of modified coupling");
    for (CLI::App* sub : {coefficients, spectrum, validate, eddington}) {
        add_common_flags(sub, cli);
    }
    validate
        ->add_option("--zeta-perturbation", cli.zeta_perturbation,
                     "Fault-injection hook: rescale one dual-path channel weight")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const gravnoise::RunConfig config = effective_config(cli);
        if (coefficients->parsed()) return cmd_coefficients(config);
        if (spectrum->parsed()) return cmd_spectrum(config);
        if (validate->parsed()) return cmd_validate(config, cli.zeta_perturbation);
        if (eddington->parsed()) return cmd_eddington(config);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const gravnoise::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gravnoise::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const gravnoise::NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const gravnoise::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
