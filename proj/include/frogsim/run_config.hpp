#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frogsim/replicate.hpp"

namespace frog {

// Flat experiment configuration. Serializes to key=value lines; flags on
// the command line override values loaded from a config file.
struct RunConfig {
    std::string variant = "standard";
    double p = 0.7;
    bool has_grid = false;
    double grid_start = 0.5;
    double grid_stop = 1.0;
    double grid_step = 0.05;
    std::int64_t n = 100000;
    int reps = 3;
    std::uint64_t seed = 1;
    int k = 8;  // profile depth
    std::string mode = "observed";  // or "constants"
    std::string format = "csv";     // or "json"
    std::string out;                // empty = stdout
    int threads = 0;
    bool serial = false;
    int bins = 0;  // distribution histogram; 0 = none

    // Throws std::invalid_argument on any out-of-domain field.
    void validate() const;

    std::vector<double> p_values() const;  // the grid, or the single p

    ExecPolicy exec() const { return ExecPolicy{threads, !serial}; }

    std::string to_kv() const;
    static RunConfig from_kv(const std::string& text);
    static RunConfig load(const std::string& path);

    // "a:b:step" -> grid fields; throws std::invalid_argument on bad syntax.
    void set_grid(const std::string& spec);
    std::string grid_spec() const;
};

}  // namespace frog
