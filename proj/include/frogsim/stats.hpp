#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace frog {

// Monte Carlo point estimate over independent replications.
struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample sd / sqrt(reps); 0 when reps < 2
    int reps = 0;
    std::vector<double> per_rep;
    std::int64_t n = 0;  // horizon the estimate was taken at

    std::pair<double, double> ci95() const {
        return {mean - 1.96 * std_error, mean + 1.96 * std_error};
    }
};

Estimate make_estimate(std::vector<double> per_rep, std::int64_t n);

// sup_x |F_emp(x) - x| for a sorted sample in [0, 1], computed exactly from
// the order statistics: max_i max(i/m - x_(i), x_(i) - (i-1)/m).
double ks_uniform(const std::vector<double>& sorted_positions);

enum class RescaleMode { Observed, Constants };

// Rescaled active-frog positions (one entry per frog) with the KS distance
// to the uniform law on [0, 1].
struct EmpiricalMeasure {
    std::vector<double> positions;  // sorted ascending
    RescaleMode mode = RescaleMode::Observed;
    double ks_to_uniform = 0.0;
    std::int64_t clamped = 0;  // constants mode only
};

}  // namespace frog
