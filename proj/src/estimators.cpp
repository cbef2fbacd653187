#include "frogsim/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "frogsim/rng.hpp"

namespace frog {

namespace {

Estimate run_speed(Variant variant, Drift p, std::int64_t n, int reps, std::uint64_t seed,
                   const ExecPolicy& exec, bool use_max) {
    if (n < 1) throw std::invalid_argument("speed estimate: n must be >= 1");
    if (reps < 1) throw std::invalid_argument("speed estimate: reps must be >= 1");
    auto per_rep = replicate(reps, exec, [&](int r) {
        World w(variant, p, derive_seed(seed, static_cast<std::uint64_t>(r)));
        w.run_until(n);
        const std::int64_t extreme = use_max ? w.max_site() : w.min_site();
        return static_cast<double>(extreme) / static_cast<double>(n);
    });
    return make_estimate(std::move(per_rep), n);
}

}  // namespace

Estimate estimate_vmax(Variant variant, Drift p, std::int64_t n, int reps, std::uint64_t seed,
                       const ExecPolicy& exec) {
    return run_speed(variant, p, n, reps, seed, exec, true);
}

Estimate estimate_vmin(Variant variant, Drift p, std::int64_t n, int reps, std::uint64_t seed,
                       const ExecPolicy& exec) {
    return run_speed(variant, p, n, reps, seed, exec, false);
}

std::vector<std::pair<std::int64_t, double>> activation_ratio_series(const World& w) {
    std::vector<std::pair<std::int64_t, double>> out;
    for (const auto& [site, time] : w.activation_times()) {
        if (site < 1) continue;
        out.emplace_back(site, static_cast<double>(time) / static_cast<double>(site));
    }
    return out;
}

double activation_ratio_tail_mean(const std::vector<std::pair<std::int64_t, double>>& series,
                                  double tail_fraction) {
    if (series.empty()) throw std::invalid_argument("activation_ratio_tail_mean: empty series");
    if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
        throw std::invalid_argument("activation_ratio_tail_mean: tail fraction in (0, 1]");
    const std::size_t start =
        series.size() - std::max<std::size_t>(1, static_cast<std::size_t>(
                                                     std::floor(series.size() * tail_fraction)));
    double sum = 0.0;
    for (std::size_t i = start; i < series.size(); ++i) sum += series[i].second;
    return sum / static_cast<double>(series.size() - start);
}

std::vector<double> running_inf(const std::vector<std::pair<std::int64_t, double>>& series) {
    std::vector<double> out;
    out.reserve(series.size());
    double inf = std::numeric_limits<double>::infinity();
    for (const auto& [site, ratio] : series) {
        inf = std::min(inf, ratio);
        out.push_back(inf);
    }
    return out;
}

Estimate estimate_ET1(Drift p, int reps, std::uint64_t seed, const ExecPolicy& exec,
                      std::int64_t step_cap, int* excluded) {
    if (!(p.p > 0.5)) throw std::domain_error("estimate_ET1: requires p > 1/2");
    if (reps < 1) throw std::invalid_argument("estimate_ET1: reps must be >= 1");
    auto raw = replicate(reps, exec, [&](int r) {
        World w(Variant::Standard, p, derive_seed(seed, static_cast<std::uint64_t>(r)));
        while (w.right_visited() < 1) {
            if (w.n() >= step_cap) return std::numeric_limits<double>::quiet_NaN();
            w.step();
        }
        return static_cast<double>(w.n());
    });
    std::vector<double> kept;
    kept.reserve(raw.size());
    int over_cap = 0;
    for (double v : raw) {
        if (std::isnan(v))
            ++over_cap;
        else
            kept.push_back(v);
    }
    if (excluded) *excluded = over_cap;
    if (kept.empty()) throw std::runtime_error("estimate_ET1: every replication hit the step cap");
    return make_estimate(std::move(kept), 1);
}

Estimate min_independent_walks(Drift p, std::int64_t n, std::int64_t walkers, int reps,
                               std::uint64_t seed, const ExecPolicy& exec) {
    if (n < 1 || walkers < 1 || reps < 1)
        throw std::invalid_argument("min_independent_walks: n, walkers, reps must be >= 1");
    auto per_rep = replicate(reps, exec, [&](int r) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
        std::binomial_distribution<std::int64_t> steps_right(n, p.p);
        std::int64_t lowest = n;
        for (std::int64_t i = 0; i < walkers; ++i)
            lowest = std::min(lowest, 2 * steps_right(rng) - n);
        return static_cast<double>(lowest) / static_cast<double>(n);
    });
    return make_estimate(std::move(per_rep), n);
}

EmpiricalMeasure empirical_measure_from_counts(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& occupied, std::int64_t n,
    RescaleMode mode, std::optional<std::pair<double, double>> vhat) {
    if (occupied.empty()) throw std::invalid_argument("empirical_measure: no active frogs");
    const std::int64_t lowest = occupied.front().first;
    const std::int64_t highest = occupied.back().first;

    EmpiricalMeasure mu;
    mu.mode = mode;
    double offset, scale;
    if (mode == RescaleMode::Observed) {
        std::int64_t total = 0;
        for (const auto& [s, c] : occupied) total += c;
        if (total < 2 || highest == lowest)
            throw std::domain_error("empirical_measure: measure undefined at this horizon");
        offset = static_cast<double>(lowest);
        scale = static_cast<double>(highest - lowest);
    } else {
        if (!vhat || !(vhat->second > vhat->first))
            throw std::invalid_argument("empirical_measure: constants mode needs v_max > v_min");
        offset = vhat->first * static_cast<double>(n);
        scale = (vhat->second - vhat->first) * static_cast<double>(n);
    }

    for (const auto& [s, c] : occupied) {
        double x = (static_cast<double>(s) - offset) / scale;
        if (x < 0.0 || x > 1.0) {
            mu.clamped += c;
            x = std::clamp(x, 0.0, 1.0);
        }
        mu.positions.insert(mu.positions.end(), static_cast<std::size_t>(c), x);
    }
    std::sort(mu.positions.begin(), mu.positions.end());
    mu.ks_to_uniform = ks_uniform(mu.positions);
    return mu;
}

EmpiricalMeasure empirical_measure(const World& w, RescaleMode mode,
                                   std::optional<std::pair<double, double>> vhat) {
    return empirical_measure_from_counts(w.occupied(), w.n(), mode, vhat);
}

std::vector<Estimate> an_profile(Drift p, std::int64_t n, int reps, int K, std::uint64_t seed,
                                 const ExecPolicy& exec) {
    if (!(p.p > 0.5 && p.p < 1.0))
        throw std::domain_error("an_profile: p must lie in (1/2, 1)");
    if (n < 1 || reps < 1 || K < 0)
        throw std::invalid_argument("an_profile: bad n, reps or K");
    auto rows = replicate(reps, exec, [&](int r) {
        World w(Variant::Modified, p, derive_seed(seed, static_cast<std::uint64_t>(r)));
        w.run_until(n);
        auto counts = w.profile(K);
        std::vector<double> row(counts.size());
        std::transform(counts.begin(), counts.end(), row.begin(),
                       [](std::int64_t c) { return static_cast<double>(c); });
        return row;
    });
    std::vector<Estimate> out;
    out.reserve(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        std::vector<double> per_rep(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            per_rep[r] = rows[r][static_cast<std::size_t>(k)];
        out.push_back(make_estimate(std::move(per_rep), n));
    }
    return out;
}

double gn_fraction(const World& w) {
    if (!w.tracking())
        throw std::invalid_argument("gn_fraction: requires a frog-tracking World");
    const auto& frogs = w.frogs();
    if (frogs.empty()) throw std::logic_error("gn_fraction: no frogs");
    const double drift = 2.0 * w.p() - 1.0;
    const double threshold = std::pow(static_cast<double>(w.n()), 0.75);
    std::int64_t good = 0;
    for (const auto& f : frogs) {
        const double expected =
            static_cast<double>(f.origin) + static_cast<double>(w.n() - f.t_wake) * drift;
        if (std::abs(static_cast<double>(f.pos) - expected) < threshold) ++good;
    }
    return static_cast<double>(good) / static_cast<double>(frogs.size());
}

std::vector<double> second_differences(const std::vector<std::pair<double, Estimate>>& grid,
                                       int* violations) {
    if (grid.size() < 3)
        throw std::invalid_argument("second_differences: need at least 3 grid points");
    const double h = grid[1].first - grid[0].first;
    if (!(h > 0)) throw std::invalid_argument("second_differences: grid not increasing");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (std::abs((grid[i].first - grid[i - 1].first) - h) > 1e-9 * std::max(1.0, std::abs(h)))
            throw std::invalid_argument("second_differences: grid not equally spaced");
    }
    std::vector<double> out;
    int bad = 0;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const auto& lo = grid[i - 1].second;
        const auto& mid = grid[i].second;
        const auto& hi = grid[i + 1].second;
        const double d2 = hi.mean - 2.0 * mid.mean + lo.mean;
        const double se = std::sqrt(hi.std_error * hi.std_error +
                                    4.0 * mid.std_error * mid.std_error +
                                    lo.std_error * lo.std_error);
        if (d2 > 3.0 * se) ++bad;
        out.push_back(d2);
    }
    if (violations) *violations = bad;
    return out;
}

}  // namespace frog
