#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "frogsim/world.hpp"

// Exhaustive enumeration of the frog model over tiny horizons. Per-site
// multinomial lumping keeps exchangeable branches collapsed, so the state
// space stays small enough for exact terminal distributions and exact
// expectations. This is the ground truth the sampling engine is validated
// against; it shares no stepping code with World.

namespace frog::oracle {

// Enumerable processes. The first three match the World variants. The
// right-front process is the modified model with the left front inert
// (no wake-ups below the minimum); it is the process whose one-step
// expectation recursions close exactly.
enum class Process { Standard, NonNegative, Modified, ModifiedRightFront };

Process process_of(Variant v);

// Canonical aggregated state: occupancy over [lo, lo+counts.size()-1] with
// nonzero first and last entries, plus the visited bounds.
struct Pattern {
    std::int64_t lo = 0;
    std::vector<std::int64_t> counts;
    std::int64_t left = 0;
    std::int64_t right = 0;

    auto operator<=>(const Pattern&) const = default;

    std::int64_t min_site() const { return lo; }
    std::int64_t max_site() const { return lo + static_cast<std::int64_t>(counts.size()) - 1; }
    std::int64_t count_at(std::int64_t site) const {
        const std::int64_t i = site - lo;
        if (i < 0 || i >= static_cast<std::int64_t>(counts.size())) return 0;
        return counts[static_cast<std::size_t>(i)];
    }
    std::int64_t total() const;
    // a_n(k): occupancy at max_site() - 2k.
    std::int64_t profile(int k) const { return count_at(max_site() - 2 * k); }
};

// The current aggregated state of a World in oracle key form.
Pattern pattern_of(const World& w);

struct Outcome {
    Pattern pattern;
    double probability;
};

struct ExactDistribution {
    Process process;
    double p;
    int horizon;
    std::vector<Outcome> entries;  // ascending by pattern
    double total_probability;      // compensated sum over entries

    template <typename F>
    double expectation(F&& f) const {
        double sum = 0.0, carry = 0.0;
        for (const auto& e : entries) {
            const double term = e.probability * static_cast<double>(f(e.pattern)) - carry;
            const double next = sum + term;
            carry = (next - sum) - term;
            sum = next;
        }
        return sum;
    }
};

// Exact distribution after n synchronous steps. Refuses n > 6 or an
// expansion whose branch count exceeds the cost guard.
ExactDistribution enumerate_exact(Process process, Drift p, int n);

// Absolute residuals of the one-step expectation identities for
// E[a_{n+1}(k)], k = 0..K, evaluated on the right-front modified process at
// times n and n+1. Exact identities: residuals are numerical noise.
std::vector<double> verify_recursions(Drift p, int n, int K);

// Expected boundary term E[1{single-site state, left neighbour unvisited}
// (1-p)^{a_n}] of the full modified model at time n: exactly the amount by
// which the k = 0 recursion misses when the left front can wake frogs.
double modified_k0_correction(Drift p, int n);

}  // namespace frog::oracle
