#include "commands.hpp"
#include "io.hpp"

#include <CLI11.hpp>

#include <string>

using namespace isokura::cli;

int main(int argc, char** argv) {
    CLI::App app{"Three-oscillator Kuramoto system with signed coupling: "
                 "equilibria, stability, trajectories, decay certificates, "
                 "and basin-of-attraction sweeps"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string formats = "csv,json,svg";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "Output directory")->capture_default_str();
        sub->add_option("--format", formats, "Comma-separated subset of csv,json,svg")
            ->capture_default_str();
        sub->add_flag("--deterministic", cfg.deterministic,
                      "Suppress timestamps in SVG output");
    };
    auto add_coupling = [&](CLI::App* sub) {
        sub->add_option("--k1", cfg.k1, "Coupling strength on the 1-2 edge")
            ->capture_default_str();
        sub->add_option("--k2", cfg.k2, "Coupling strength on the 1-3 and 2-3 edges")
            ->capture_default_str();
    };
    auto add_integrator = [&](CLI::App* sub) {
        sub->add_option("--dt", cfg.dt, "Fixed integrator step")->capture_default_str();
        sub->add_option("--tmax", cfg.tmax, "Integration time limit");
    };

    CLI::App* eq = app.add_subcommand("equilibria", "Tabulate critical points, spectra, "
                                                    "stability and energies");
    add_coupling(eq);
    add_common(eq);

    CLI::App* sim = app.add_subcommand("simulate", "Integrate a trajectory");
    add_coupling(sim);
    add_integrator(sim);
    add_common(sim);
    sim->add_option("--theta0", cfg.theta0, "Initial phases a,b,c")->required();

    CLI::App* basin = app.add_subcommand("basin", "Sweep the torus of initial phase "
                                                  "differences and classify basins");
    add_coupling(basin);
    add_integrator(basin);
    add_common(basin);
    basin->add_option("--res", cfg.res, "Grid resolution per axis")->capture_default_str();
    basin->add_flag("--check-theorem", cfg.check_theorem,
                    "Fail if the certified initial boxes leak out of their basins");

    CLI::App* verify = app.add_subcommand("verify", "Run the full property battery and "
                                                    "write verify.json");
    add_coupling(verify);
    add_common(verify);
    verify->add_option("--samples", cfg.samples, "Random couplings to test")
        ->capture_default_str();
    verify->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    verify->add_flag("--inject-typo-eigvec", cfg.inject_typo_eigvec,
                     "Check the printed (incorrect) eigenvector radicand instead");

    CLI::App* fig = app.add_subcommand("figure1", "Energy-vs-ratio table and chart for "
                                                  "all critical points");
    add_common(fig);
    fig->add_option("--k1-sign", cfg.k1_sign, "Sign of k1 (+1 or -1)")
        ->capture_default_str();
    fig->add_option("--ratios", cfg.ratios, "Ratio grid start:stop:step")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    cfg.formats.clear();
    for (std::size_t pos = 0; pos < formats.size();) {
        const std::size_t comma = formats.find(',', pos);
        const std::string f = formats.substr(pos, comma - pos);
        if (f != "csv" && f != "json" && f != "svg") {
            print_error("unknown format: " + f);
            return kExitBadParams;
        }
        cfg.formats.insert(f);
        pos = comma == std::string::npos ? formats.size() : comma + 1;
    }
    if (cfg.formats.empty()) {
        print_error("--format must name at least one of csv,json,svg");
        return kExitBadParams;
    }

    try {
        if (eq->parsed())
            return cmd_equilibria(cfg);
        if (sim->parsed())
            return cmd_simulate(cfg);
        if (basin->parsed())
            return cmd_basin(cfg);
        if (verify->parsed())
            return cmd_verify(cfg);
        if (fig->parsed())
            return cmd_figure1(cfg);
    } catch (const std::exception& e) {
        print_error(e.what());
        return kExitBadParams;
    }
    return kExitBadParams;
}
