#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "latwave/acceptance.hpp"
#include "latwave/errors.hpp"
#include "latwave/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"anti-plane waves in a square mass-spring lattice"};
    app.require_subcommand(1);

    std::string config_path, study, out_dir;

    auto* simulate = app.add_subcommand("simulate", "run one experiment from a config file");
    simulate->add_option("config", config_path, "key=value config file")->required();
    simulate->add_option("-o,--out", out_dir,
                         "output directory (default: $LATTICEWAVE_OUTDIR or ./out)");

    auto* reproduce_cmd = app.add_subcommand("reproduce", "rebuild a canned study");
    reproduce_cmd
        ->add_option("study", study, "figures-1-2-3 | decay-scaling | shortwave-arrival")
        ->required();
    reproduce_cmd->add_option("-o,--out", out_dir,
                              "output directory (default: $LATTICEWAVE_OUTDIR or ./out)");

    auto* acceptance_cmd =
        app.add_subcommand("acceptance", "run the acceptance suite and print the table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (simulate->parsed()) {
            const auto spec = latwave::load_config(config_path);
            const auto summary =
                latwave::run_experiment(spec, latwave::resolve_out_dir(out_dir));
            for (const auto& file : summary.files) std::cout << file << "\n";
        } else if (reproduce_cmd->parsed()) {
            const auto summary =
                latwave::reproduce(study, latwave::resolve_out_dir(out_dir));
            for (const auto& file : summary.files) std::cout << file << "\n";
        } else if (acceptance_cmd->parsed()) {
            const auto report = latwave::acceptance::run_all(std::cout);
            if (report.failed() > 0) {
                std::cout << report.failed() << " of " << report.results.size()
                          << " criteria failed\n";
                return 1;
            }
            std::cout << "all " << report.results.size() << " criteria passed\n";
        }
    } catch (const latwave::validation_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const latwave::instability_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const latwave::io_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
    return 0;
}
