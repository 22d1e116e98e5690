#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "invsrc/grid.hpp"

namespace invsrc {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CustomPhantomConfig {
    std::string shape = "disk";
    double center_x = 0.0;
    double center_y = 0.0;
    double radius = 0.25;
    double amplitude = 2.0;
    double background = 0.0;
};

/// One experiment run. Defaults mirror the full-scale setup: R = 1, T = 0.2,
/// N_x = 100, N_t = 60, epsilon = 1e-8.
struct RunConfig {
    GridSpec grid{1.0, 100, 60, 0.2};
    std::string test = "test1";                 // test1..test6 or custom
    std::string mode = "inverse_source";        // inverse_source | coefficient
    double delta = 0.0;
    std::uint64_t seed = 1;
    double epsilon = 1e-8;
    int refinement = 2;
    int n_star = 20;
    std::string output_dir = "out";
    bool weighted_gram = false;
    bool test2_table_scaling = true;
    int verbosity = 1;
    // Coefficient-mode settings.
    double cip_c0 = 1.0;
    double cip_g = 2.0;                         // constant initial condition, > 0
    bool cip_incremental_update = false;
    std::optional<CustomPhantomConfig> custom;
};

/// Parse a JSON config file. Unknown keys anywhere are rejected; every key is
/// optional and falls back to the defaults above. Throws ConfigError.
RunConfig load_config(const std::string& path);

void validate(const RunConfig& config);

}  // namespace invsrc
