#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frogsim/rng.hpp"

namespace frog {

enum class Variant {
    Standard,     // one sleeping frog at every site except 0, active frog at 0
    NonNegative,  // sleeping frogs only at positive sites
    Modified      // Standard plus a sleeper re-deposited behind a left move of the maximum
};

const char* to_string(Variant v);
std::optional<Variant> variant_from_string(std::string_view s);

// Drift parameter of every walker: probability of a +1 step.
struct Drift {
    double p;
    explicit Drift(double value) : p(value) {
        if (!(p >= 0.5 && p <= 1.0))
            throw std::domain_error("Drift: p must lie in [1/2, 1]");
    }
};

struct ActivationRecord {
    std::int64_t site;
    std::int64_t time;
    int wake_index;  // 0 for the first wake at a site; >0 for replenished sleepers (Modified)
};

// Per-step time series of one run.
struct SeriesRecord {
    std::vector<std::int64_t> max_site;  // M_n
    std::vector<std::int64_t> min_site;  // m_n
    std::vector<std::int64_t> active;    // |A_n|
    // Modified only: profile[n][k] = number of frogs at M_n - 2k, k = 0..K.
    std::vector<std::vector<std::int64_t>> profile;
};

struct RecordFlags {
    bool series = false;
    bool profile = false;
    int profile_k = 8;
};

// Per-frog record, maintained only when identity tracking is enabled.
struct Frog {
    std::int64_t origin;
    std::int64_t pos;
    std::int64_t t_wake;
};

// Full state of one realization. Active frogs are aggregated into per-site
// counts; one synchronous step moves every active frog by +-1 via a
// Binomial(count, p) split per occupied site, then resolves wake-ups at the
// fronts. Single-threaded by design; parallelism lives at the replication
// level.
class World {
public:
    World(Variant variant, Drift p, std::uint64_t seed, bool track_frogs = false);

    // One synchronous time step for all active frogs.
    void step();

    // Steps until n() == n_target, recording per flags.
    SeriesRecord run_until(std::int64_t n_target, const RecordFlags& flags = {});

    Variant variant() const { return variant_; }
    double p() const { return p_; }
    std::int64_t n() const { return n_; }
    std::int64_t max_site() const { return max_site_; }
    std::int64_t min_site() const { return min_site_; }
    std::int64_t total_active() const { return total_active_; }
    std::int64_t left_visited() const { return left_visited_; }
    std::int64_t right_visited() const { return right_visited_; }

    std::int64_t count_at(std::int64_t site) const;

    // Occupied (site, count) pairs, ascending by site.
    std::vector<std::pair<std::int64_t, std::int64_t>> occupied() const;

    // a_n(k) for k = 0..K read off the current state.
    std::vector<std::int64_t> profile(int K) const;

    // First activation time per site (T_i); sites never activated are absent.
    std::map<std::int64_t, std::int64_t> activation_times() const;

    // Every wake event in order, including the origin frog at time 0.
    const std::vector<ActivationRecord>& activations() const { return activations_; }

    bool tracking() const { return track_; }
    const std::vector<Frog>& frogs() const { return frogs_; }

    // Throws std::logic_error on any violated structural invariant.
    void check_invariants() const;

private:
    void ensure_window(std::int64_t lo, std::int64_t hi);
    std::int64_t& cell(std::vector<std::int64_t>& buf, std::int64_t site) {
        return buf[static_cast<std::size_t>(site - lo_)];
    }
    void wake(std::vector<std::int64_t>& buf, std::int64_t site, std::int64_t time);

    Variant variant_;
    double p_;
    bool track_;
    Rng rng_;

    std::int64_t n_ = 0;
    std::int64_t lo_ = 0;  // site of counts_[0]
    std::vector<std::int64_t> counts_;
    std::vector<std::int64_t> scratch_;

    std::int64_t left_visited_ = 0;
    std::int64_t right_visited_ = 0;
    std::int64_t max_site_ = 0;
    std::int64_t min_site_ = 0;
    std::int64_t total_active_ = 1;

    std::vector<ActivationRecord> activations_;
    std::map<std::int64_t, std::int64_t> first_activation_;
    std::map<std::int64_t, int> wake_count_;

    std::vector<Frog> frogs_;
};

}  // namespace frog
