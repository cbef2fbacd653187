#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

// Closed-form speeds and bounds for the frog model with drift, as pure
// functions of the drift parameter p. Domains are enforced with exceptions
// rather than sentinel values.

namespace frog::theory {

namespace detail {
inline void require_open(double p, const char* what) {
    if (!(p > 0.5 && p < 1.0))
        throw std::domain_error(std::string(what) + ": p must lie in (1/2, 1)");
}
}  // namespace detail

// Speed of the minimum, v_min = 2p - 1. Valid for p > 1/2; at p = 1/2 the
// minimum instead mirrors the maximum (v_min = -v_max), which this formula
// does not capture.
inline double vmin_exact(double p) {
    if (!(p > 0.5 && p <= 1.0))
        throw std::domain_error("vmin_exact: formula valid for p > 1/2 only");
    return 2.0 * p - 1.0;
}

// Mean hitting time of +1 for a single walk with drift, E[T_1^s] = 1/(2p-1).
inline double hitting_time_mean(double p) {
    if (!(p > 0.5 && p <= 1.0))
        throw std::domain_error("hitting_time_mean: infinite mean at p = 1/2");
    return 1.0 / (2.0 * p - 1.0);
}

// Uniform bound on the expected number of frogs in the maximum of the
// modified model: (2-p)p / ((1-p)(2p-1)).
inline double an_bound(double p) {
    detail::require_open(p, "an_bound");
    return (2.0 - p) * p / ((1.0 - p) * (2.0 * p - 1.0));
}

// Per-offset version: E[a_n(k)] <= an_bound(p) / p^k.
inline double an_k_bound(double p, int k) {
    if (k < 0) throw std::domain_error("an_k_bound: k must be nonnegative");
    return an_bound(p) / std::pow(p, k);
}

struct UpperBound {
    double value;
    // True when 2(1-p)^E underflows so far that the bound degenerates to 1
    // in double precision and says nothing.
    bool vacuous;
};

// Upper bound on the speed of the maximum:
// v_max <= 1 / (1 + 2(1-p)^E) with E = (2-p)p/((1-p)(2p-1)).
inline UpperBound vmax_upper_bound_info(double p) {
    detail::require_open(p, "vmax_upper_bound");
    const double exponent = an_bound(p);
    const double t = 2.0 * std::exp(exponent * std::log1p(-p));
    return UpperBound{1.0 / (1.0 + t), t < 1e-300};
}

inline double vmax_upper_bound(double p) { return vmax_upper_bound_info(p).value; }

// Numeric floor for the speed of the maximum; the paper's inequality is
// strict for p < 1, callers assert estimates strictly above it.
inline double vmax_lower_bound(double p) {
    if (!(p >= 0.5 && p <= 1.0))
        throw std::domain_error("vmax_lower_bound: p must lie in [1/2, 1]");
    return 2.0 * p - 1.0;
}

// Conjectured stationary law of the number of frogs in the maximum,
// measured from simulation, never derived.
using HeuristicDistribution = std::map<int, double>;

// Heuristic speed sum_k alpha(k) (1 - 2(1-p)^k).
inline double heuristic_speed(const HeuristicDistribution& alpha, double p) {
    if (!(p >= 0.5 && p <= 1.0))
        throw std::domain_error("heuristic_speed: p must lie in [1/2, 1]");
    double total = 0.0;
    for (const auto& [k, w] : alpha) {
        if (k < 1 || w < 0.0)
            throw std::domain_error("heuristic_speed: weights must be nonnegative on k >= 1");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::domain_error("heuristic_speed: weights must sum to 1");
    double speed = 0.0;
    for (const auto& [k, w] : alpha)
        speed += w * (1.0 - 2.0 * std::pow(1.0 - p, k));
    return speed;
}

}  // namespace frog::theory
