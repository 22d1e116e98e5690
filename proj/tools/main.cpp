#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "invsrc/experiment.hpp"
#include "invsrc/io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Reconstruct parabolic source terms and coefficients from boundary flux data"};

    std::string config_path;
    std::optional<double> delta, epsilon;
    std::optional<std::uint64_t> seed;
    std::optional<int> nx, nt;
    std::optional<std::string> out_dir, mode, test;
    int verbosity = 1;

    app.add_option("-c,--config", config_path, "JSON config file")->required();
    app.add_option("--delta", delta, "override noise level");
    app.add_option("--seed", seed, "override noise seed");
    app.add_option("--epsilon", epsilon, "override regularization weight");
    app.add_option("--nx", nx, "override spatial subdivisions N_x");
    app.add_option("--nt", nt, "override time subdivisions N_t");
    app.add_option("-o,--out", out_dir, "override output directory");
    app.add_option("--mode", mode, "override mode (inverse_source|coefficient)");
    app.add_option("--test", test, "override phantom name");
    app.add_option("-v,--verbosity", verbosity, "0 quiet, 1 normal");

    CLI11_PARSE(app, argc, argv);

    invsrc::RunConfig cfg;
    try {
        cfg = invsrc::load_config(config_path);
        if (delta) cfg.delta = *delta;
        if (seed) cfg.seed = *seed;
        if (epsilon) cfg.epsilon = *epsilon;
        if (nx || nt)
            cfg.grid = invsrc::GridSpec(cfg.grid.R, nx.value_or(cfg.grid.N_x),
                                        nt.value_or(cfg.grid.N_t), cfg.grid.T);
        if (out_dir) cfg.output_dir = *out_dir;
        if (mode) cfg.mode = *mode;
        if (test) cfg.test = *test;
        cfg.verbosity = verbosity;
        invsrc::validate(cfg);
    } catch (const std::exception& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 1;
    }

    try {
        std::vector<invsrc::MetricRow> rows = invsrc::run(cfg);
        if (cfg.verbosity > 0) {
            std::cout << "wrote artifacts to " << cfg.output_dir << '\n';
            for (const auto& r : rows)
                std::cout << r.inclusion << ": true " << invsrc::format_double(r.extreme_true)
                          << ", computed " << invsrc::format_double(r.extreme_comp)
                          << ", rel err " << invsrc::format_double(r.err_rel) << '\n';
        }
    } catch (const invsrc::IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 3;
    } catch (const invsrc::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
