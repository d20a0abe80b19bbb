// Quantum limits on a one-way length measurement: evaluate the
// geodesic-deviation noise floor for a slow probe in a Maxwell + neutrino
// vacuum, and show how far below the free gravitational-wave floor the
// gravity-of-vacuum channel sits.

#include <cstdio>

#include "gravnoise/gravnoise.hpp"

int main() {
    using namespace gravnoise;

    const FieldContent content{
        {{SpeciesKind::Maxwell, 0.0, 1}, {SpeciesKind::Neutrino, 0.0, 3}}, Dimension(4)};
    const PhysicalScales scales = PhysicalScales::natural();  // hbar = G = 1

    ProbeConfig probe;
    probe.v = 0.0;
    probe.tau = 1.0;

    const std::vector<double> grid = omega_grid({0.1, 10.0, 7, GridSpacing::Log});

    const DeviationSpectrum gw =
        deviation_spectrum(probe, content, scales, grid, Channels::GWOnly);
    const DeviationSpectrum vac =
        deviation_spectrum(probe, content, scales, grid, Channels::GravityOfVacuum);

    std::printf("longitudinal deviation noise, Planck units (tau = %.1f, v = %.1f)\n",
                probe.tau, probe.v);
    std::printf("%12s  %14s  %14s  %12s\n", "omega", "C_d33 (waves)", "C_d33 (vacuum)",
                "vac/waves");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::printf("%12.5g  %14.6g  %14.6g  %12.5g\n", gw.omega[i], gw.c33[i], vac.c33[i],
                    gw.c33[i] != 0.0 ? vac.c33[i] / gw.c33[i] : 0.0);
    }

    const std::vector<ScalingPoint> scaling = scaling_report({1e-3, 1e-2, 1e-1}, scales, content);
    std::printf("\nsuppression of the vacuum channel: ratio / (omega l_P)^2\n");
    for (const ScalingPoint& p : scaling) {
        std::printf("  omega l_P = %-8.1e  constant = %.6f\n", p.omega_lp,
                    p.suppression_constant);
    }
    std::printf("  (2 (4 + N_nu) / (35 pi) with N_nu = 3 is %.6f)\n",
                2.0 * 7.0 / (35.0 * 3.14159265358979));
    return 0;
}
