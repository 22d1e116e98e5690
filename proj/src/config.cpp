#include "invsrc/config.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

namespace invsrc {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& known,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!known.count(it.key()))
            throw ConfigError("unknown key '" + it.key() + "' in " + where);
}

template <typename T>
void get_if(const json& obj, const char* key, T& out) {
    if (obj.contains(key)) {
        try {
            out = obj.at(key).get<T>();
        } catch (const json::exception& e) {
            throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
        }
    }
}

}  // namespace

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    json root;
    try {
        in >> root;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config root must be an object");

    reject_unknown(root,
                   {"grid", "test", "mode", "delta", "seed", "epsilon", "refinement",
                    "n_star", "output_dir", "weighted_gram", "test2_table_scaling",
                    "verbosity", "cip", "custom"},
                   "config");

    RunConfig cfg;
    if (root.contains("grid")) {
        const json& g = root.at("grid");
        reject_unknown(g, {"R", "N_x", "N_t", "T"}, "grid");
        double R = cfg.grid.R, T = cfg.grid.T;
        int Nx = cfg.grid.N_x, Nt = cfg.grid.N_t;
        get_if(g, "R", R);
        get_if(g, "N_x", Nx);
        get_if(g, "N_t", Nt);
        get_if(g, "T", T);
        try {
            cfg.grid = GridSpec(R, Nx, Nt, T);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("grid: ") + e.what());
        }
    }
    get_if(root, "test", cfg.test);
    get_if(root, "mode", cfg.mode);
    get_if(root, "delta", cfg.delta);
    get_if(root, "seed", cfg.seed);
    get_if(root, "epsilon", cfg.epsilon);
    get_if(root, "refinement", cfg.refinement);
    get_if(root, "n_star", cfg.n_star);
    get_if(root, "output_dir", cfg.output_dir);
    get_if(root, "weighted_gram", cfg.weighted_gram);
    get_if(root, "test2_table_scaling", cfg.test2_table_scaling);
    get_if(root, "verbosity", cfg.verbosity);

    if (root.contains("cip")) {
        const json& c = root.at("cip");
        reject_unknown(c, {"c0", "g", "incremental_update"}, "cip");
        get_if(c, "c0", cfg.cip_c0);
        get_if(c, "g", cfg.cip_g);
        get_if(c, "incremental_update", cfg.cip_incremental_update);
    }
    if (root.contains("custom")) {
        const json& c = root.at("custom");
        reject_unknown(c, {"shape", "center", "radius", "amplitude", "background"}, "custom");
        CustomPhantomConfig p;
        get_if(c, "shape", p.shape);
        if (c.contains("center")) {
            const json& ctr = c.at("center");
            if (!ctr.is_array() || ctr.size() != 2)
                throw ConfigError("custom.center must be [x, y]");
            p.center_x = ctr[0].get<double>();
            p.center_y = ctr[1].get<double>();
        }
        get_if(c, "radius", p.radius);
        get_if(c, "amplitude", p.amplitude);
        get_if(c, "background", p.background);
        cfg.custom = p;
    }
    validate(cfg);
    return cfg;
}

void validate(const RunConfig& cfg) {
    static const std::set<std::string> tests = {"test1", "test2", "test3",
                                               "test4", "test5", "test6", "custom"};
    if (!tests.count(cfg.test)) throw ConfigError("unknown test '" + cfg.test + "'");
    if (cfg.mode != "inverse_source" && cfg.mode != "coefficient")
        throw ConfigError("mode must be inverse_source or coefficient");
    if (cfg.test == "custom" && !cfg.custom)
        throw ConfigError("test 'custom' requires a custom phantom block");
    if (cfg.custom && cfg.custom->shape != "disk")
        throw ConfigError("custom.shape: only 'disk' is supported");
    if (cfg.delta < 0.0) throw ConfigError("delta must be >= 0");
    if (cfg.epsilon <= 0.0) throw ConfigError("epsilon must be > 0");
    if (cfg.refinement < 1) throw ConfigError("refinement must be >= 1");
    if (cfg.n_star < 1) throw ConfigError("n_star must be >= 1");
    if (cfg.mode == "coefficient" && cfg.cip_g <= 0.0)
        throw ConfigError("cip.g must be > 0");
}

}  // namespace invsrc
