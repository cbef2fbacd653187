#include "frogsim/world.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace frog {

namespace {
constexpr std::int64_t kSiteLimit = std::int64_t{1} << 62;
}

const char* to_string(Variant v) {
    switch (v) {
        case Variant::Standard: return "standard";
        case Variant::NonNegative: return "nonnegative";
        case Variant::Modified: return "modified";
    }
    return "?";
}

std::optional<Variant> variant_from_string(std::string_view s) {
    if (s == "standard") return Variant::Standard;
    if (s == "nonnegative") return Variant::NonNegative;
    if (s == "modified") return Variant::Modified;
    return std::nullopt;
}

World::World(Variant variant, Drift p, std::uint64_t seed, bool track_frogs)
    : variant_(variant), p_(p.p), track_(track_frogs), rng_(seed) {
    lo_ = -32;
    counts_.assign(64, 0);
    scratch_.assign(64, 0);
    cell(counts_, 0) = 1;
    activations_.push_back({0, 0, 0});
    first_activation_.emplace(0, 0);
    wake_count_[0] = 1;
    if (track_) frogs_.push_back({0, 0, 0});
}

void World::ensure_window(std::int64_t lo, std::int64_t hi) {
    const std::int64_t cur_hi = lo_ + static_cast<std::int64_t>(counts_.size()) - 1;
    if (lo >= lo_ && hi <= cur_hi) return;
    const std::int64_t pad = std::max<std::int64_t>(64, static_cast<std::int64_t>(counts_.size()));
    const std::int64_t new_lo = std::min(lo, lo_) - pad;
    const std::int64_t new_hi = std::max(hi, cur_hi) + pad;
    const std::size_t size = static_cast<std::size_t>(new_hi - new_lo + 1);
    std::vector<std::int64_t> fresh(size, 0);
    std::copy(counts_.begin(), counts_.end(), fresh.begin() + (lo_ - new_lo));
    counts_.swap(fresh);
    scratch_.assign(size, 0);
    lo_ = new_lo;
}

void World::wake(std::vector<std::int64_t>& buf, std::int64_t site, std::int64_t time) {
    ++cell(buf, site);
    const int idx = wake_count_[site]++;
    activations_.push_back({site, time, idx});
    first_activation_.emplace(site, time);
    if (track_) frogs_.push_back({site, site, time});
}

void World::step() {
    const std::int64_t m = min_site_;
    const std::int64_t M = max_site_;
    if (M + 2 >= kSiteLimit || m - 2 <= -kSiteLimit)
        throw std::runtime_error("step: site index out of the supported range |site| < 2^62");
    ensure_window(m - 1, M + 1);

    // scratch_ is all-zero on entry (restored at the end of every step).
    if (track_) {
        for (auto& f : frogs_) {
            if (p_ >= 1.0)
                ++f.pos;
            else
                f.pos += rng_.bernoulli(p_) ? 1 : -1;
            ++cell(scratch_, f.pos);
        }
    } else if (p_ >= 1.0) {
        // Degenerate drift: deterministic shift, no sampling.
        for (std::int64_t s = M; s >= m; s -= 2) {
            const std::int64_t c = cell(counts_, s);
            if (c) cell(scratch_, s + 1) = c;
        }
    } else {
        // All active frogs share one parity class, so only every other site
        // in [m, M] can be occupied.
        for (std::int64_t s = m; s <= M; s += 2) {
            const std::int64_t c = cell(counts_, s);
            if (!c) continue;
            const std::int64_t r = rng_.binomial(c, p_);
            cell(scratch_, s + 1) += r;
            cell(scratch_, s - 1) += c - r;
        }
    }

    // Every frog moves, so both extremes move by exactly one.
    const std::int64_t new_m = cell(scratch_, m - 1) > 0 ? m - 1 : m + 1;
    const std::int64_t new_M = cell(scratch_, M + 1) > 0 ? M + 1 : M - 1;
    const std::int64_t t = n_ + 1;
    std::int64_t wakes = 0;

    if (variant_ == Variant::Modified) {
        // One sleeper sits at every site right of the maximum (fresh sites
        // from the initial configuration, vacated sites by replenishment),
        // so every strict increase of the maximum wakes exactly one frog.
        if (new_M > M) {
            wake(scratch_, new_M, t);
            ++wakes;
            right_visited_ = std::max(right_visited_, new_M);
        }
    } else {
        if (new_M == right_visited_ + 1) {
            wake(scratch_, new_M, t);
            ++wakes;
            ++right_visited_;
        }
    }

    if (new_m < left_visited_) {
        if (variant_ == Variant::NonNegative) {
            left_visited_ = new_m;  // no sleepers on negative sites
        } else {
            wake(scratch_, new_m, t);
            ++wakes;
            left_visited_ = new_m;
        }
    }

    counts_.swap(scratch_);
    // Old counts (now scratch_) are nonzero only on [m, M]; wipe them so the
    // all-zero scratch invariant holds for the next step.
    std::fill(scratch_.begin() + static_cast<std::size_t>(m - lo_),
              scratch_.begin() + static_cast<std::size_t>(M - lo_) + 1, 0);

    n_ = t;
    min_site_ = new_m;
    max_site_ = new_M;
    total_active_ += wakes;
}

SeriesRecord World::run_until(std::int64_t n_target, const RecordFlags& flags) {
    if (n_target < n_) throw std::invalid_argument("run_until: target before current time");
    SeriesRecord rec;
    const auto record = [&] {
        if (flags.series) {
            rec.max_site.push_back(max_site_);
            rec.min_site.push_back(min_site_);
            rec.active.push_back(total_active_);
        }
        if (flags.profile && variant_ == Variant::Modified)
            rec.profile.push_back(profile(flags.profile_k));
    };
    record();
    while (n_ < n_target) {
        step();
        record();
    }
    return rec;
}

std::int64_t World::count_at(std::int64_t site) const {
    const std::int64_t idx = site - lo_;
    if (idx < 0 || idx >= static_cast<std::int64_t>(counts_.size())) return 0;
    return counts_[static_cast<std::size_t>(idx)];
}

std::vector<std::pair<std::int64_t, std::int64_t>> World::occupied() const {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t s = min_site_; s <= max_site_; ++s) {
        const std::int64_t c = count_at(s);
        if (c) out.emplace_back(s, c);
    }
    return out;
}

std::vector<std::int64_t> World::profile(int K) const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) out[static_cast<std::size_t>(k)] = count_at(max_site_ - 2 * k);
    return out;
}

std::map<std::int64_t, std::int64_t> World::activation_times() const {
    return first_activation_;
}

void World::check_invariants() const {
    const auto fail = [](const std::string& what) { throw std::logic_error("World invariant: " + what); };

    if (!(left_visited_ <= min_site_ && min_site_ <= max_site_ && max_site_ <= right_visited_))
        fail("L <= m <= M <= R violated");

    std::int64_t sum = 0;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        const std::int64_t s = lo_ + static_cast<std::int64_t>(i);
        const std::int64_t c = counts_[i];
        if (c < 0) fail("negative count");
        if (c > 0 && (s < min_site_ || s > max_site_)) fail("count outside [m, M]");
        if (c > 0 && ((s + n_) % 2 + 2) % 2 != 0) fail("occupied site off the common parity class");
        sum += c;
    }
    if (sum != total_active_) fail("sum of counts != total_active");
    if (static_cast<std::int64_t>(activations_.size()) != total_active_)
        fail("activation records != total_active");

    switch (variant_) {
        case Variant::Standard:
            if (total_active_ != right_visited_ - left_visited_ + 1)
                fail("Standard: total_active != R - L + 1");
            if (static_cast<std::int64_t>(first_activation_.size()) != total_active_)
                fail("Standard: activated sites != total_active");
            break;
        case Variant::NonNegative:
            if (total_active_ != right_visited_ + 1)
                fail("NonNegative: total_active != R + 1");
            if (first_activation_.begin()->first < 0)
                fail("NonNegative: activation on a negative site");
            break;
        case Variant::Modified:
            if (n_ >= 1 && count_at(max_site_) < 2)
                fail("Modified: fewer than two frogs in the maximum");
            break;
    }
    // The activated-site set is an interval for Standard and Modified.
    if (variant_ != Variant::NonNegative) {
        if (first_activation_.begin()->first != left_visited_ ||
            first_activation_.rbegin()->first != right_visited_ ||
            static_cast<std::int64_t>(first_activation_.size()) !=
                right_visited_ - left_visited_ + 1)
            fail("activated sites are not exactly [L, R]");
    }

    if (track_) {
        if (static_cast<std::int64_t>(frogs_.size()) != total_active_)
            fail("tracked frog count != total_active");
        std::map<std::int64_t, std::int64_t> from_frogs;
        for (const auto& f : frogs_) ++from_frogs[f.pos];
        for (const auto& [s, c] : from_frogs)
            if (count_at(s) != c) fail("tracked positions disagree with counts");
    }
}

}  // namespace frog
