#include "frogsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace frog {

Estimate make_estimate(std::vector<double> per_rep, std::int64_t n) {
    if (per_rep.empty()) throw std::invalid_argument("make_estimate: no replications");
    Estimate e;
    e.reps = static_cast<int>(per_rep.size());
    e.n = n;
    double sum = 0.0;
    for (double v : per_rep) sum += v;
    e.mean = sum / e.reps;
    if (e.reps >= 2) {
        double ss = 0.0;
        for (double v : per_rep) ss += (v - e.mean) * (v - e.mean);
        e.std_error = std::sqrt(ss / (e.reps - 1)) / std::sqrt(static_cast<double>(e.reps));
    }
    e.per_rep = std::move(per_rep);
    return e;
}

double ks_uniform(const std::vector<double>& x) {
    if (x.empty()) throw std::invalid_argument("ks_uniform: empty sample");
    const double m = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0.0 || x[i] > 1.0)
            throw std::invalid_argument("ks_uniform: sample value outside [0, 1]");
        if (i > 0 && x[i] < x[i - 1])
            throw std::invalid_argument("ks_uniform: sample not sorted");
        const double hi = static_cast<double>(i + 1) / m - x[i];
        const double lo = x[i] - static_cast<double>(i) / m;
        d = std::max(d, std::max(hi, lo));
    }
    return d;
}

}  // namespace frog
