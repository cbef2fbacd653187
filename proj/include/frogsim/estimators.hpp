#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frogsim/replicate.hpp"
#include "frogsim/stats.hpp"
#include "frogsim/world.hpp"

// Monte Carlo estimators over replicated simulations. All estimators derive
// the seed of replication r as derive_seed(seed, r), so results do not
// depend on the execution policy.

namespace frog {

// Mean of M_n/n over independent runs.
Estimate estimate_vmax(Variant variant, Drift p, std::int64_t n, int reps,
                       std::uint64_t seed, const ExecPolicy& exec = {});

// Mean of m_n/n over independent runs.
Estimate estimate_vmin(Variant variant, Drift p, std::int64_t n, int reps,
                       std::uint64_t seed, const ExecPolicy& exec = {});

// (i, T_i / i) for every activated site i >= 1; the tail mean estimates
// 1/v_max.
std::vector<std::pair<std::int64_t, double>> activation_ratio_series(const World& w);

// Mean of T_i/i over the last tail_fraction of the series.
double activation_ratio_tail_mean(
    const std::vector<std::pair<std::int64_t, double>>& series, double tail_fraction = 0.5);

// Running infimum of the second components of the series.
std::vector<double> running_inf(const std::vector<std::pair<std::int64_t, double>>& series);

// Mean first-visit time of site 1 over fresh Standard runs. Runs exceeding
// step_cap are excluded from the estimate and counted in *excluded.
Estimate estimate_ET1(Drift p, int reps, std::uint64_t seed, const ExecPolicy& exec = {},
                      std::int64_t step_cap = 10'000'000, int* excluded = nullptr);

// Mean over reps of min over walkers of S_n/n for independent walks with
// drift p. Each walker's terminal displacement is drawn exactly as
// 2 Binomial(n, p) - n.
Estimate min_independent_walks(Drift p, std::int64_t n, std::int64_t walkers, int reps,
                               std::uint64_t seed, const ExecPolicy& exec = {});

// Empirical measure of the active frog positions rescaled to [0, 1].
// Observed mode divides by the realized spread; constants mode uses the
// supplied (v_min, v_max) speeds and clamps.
EmpiricalMeasure empirical_measure(const World& w, RescaleMode mode,
                                   std::optional<std::pair<double, double>> vhat = std::nullopt);

// Raw-occupancy overload used by tests and by the World wrapper.
EmpiricalMeasure empirical_measure_from_counts(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& occupied, std::int64_t n,
    RescaleMode mode, std::optional<std::pair<double, double>> vhat = std::nullopt);

// Per-k mean of a_n(k) at the final step of Modified-variant runs,
// k = 0..K.
std::vector<Estimate> an_profile(Drift p, std::int64_t n, int reps, int K,
                                 std::uint64_t seed, const ExecPolicy& exec = {});

// Fraction of active frogs within n^{3/4} of their conditional expected
// location origin + (n - T_i)(2p - 1). Requires a frog-tracking World.
double gn_fraction(const World& w);

// Second differences v(p_{i+1}) - 2 v(p_i) + v(p_{i-1}) over an equally
// spaced grid; *violations counts interior points whose second difference
// exceeds +3 combined standard errors.
std::vector<double> second_differences(const std::vector<std::pair<double, Estimate>>& grid,
                                       int* violations = nullptr);

}  // namespace frog
