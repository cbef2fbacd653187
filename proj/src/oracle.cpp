#include "frogsim/oracle.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace frog::oracle {

namespace {

constexpr long long kBranchBudget = 20'000'000;
constexpr int kMaxHorizon = 6;
constexpr int kMaxCount = 64;

// C(n, k) as doubles; counts stay tiny at enumerable horizons.
const std::array<std::array<double, kMaxCount + 1>, kMaxCount + 1>& choose_table() {
    static const auto table = [] {
        std::array<std::array<double, kMaxCount + 1>, kMaxCount + 1> t{};
        for (int n = 0; n <= kMaxCount; ++n) {
            t[n][0] = 1.0;
            for (int k = 1; k <= n; ++k)
                t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0.0);
        }
        return t;
    }();
    return table;
}

struct Expander {
    Process process;
    double p;
    std::map<Pattern, double>* next;
    long long* branches;

    std::int64_t m, M, left, right;
    std::vector<std::pair<std::int64_t, std::int64_t>> occ;  // (site, count)
    std::vector<std::int64_t> scratch;                       // over [m-1, M+1]

    void run(const Pattern& st, double prob) {
        m = st.min_site();
        M = st.max_site();
        left = st.left;
        right = st.right;
        occ.clear();
        for (std::int64_t s = m; s <= M; ++s)
            if (auto c = st.count_at(s)) occ.emplace_back(s, c);
        scratch.assign(static_cast<std::size_t>(M - m + 3), 0);
        dfs(0, prob);
    }

    std::int64_t& at(std::int64_t site) { return scratch[static_cast<std::size_t>(site - (m - 1))]; }

    void dfs(std::size_t i, double w) {
        if (++*branches > kBranchBudget)
            throw std::domain_error("enumerate_exact: branch budget exceeded (> " +
                                    std::to_string(kBranchBudget) + " branches)");
        if (i == occ.size()) {
            finish(w);
            return;
        }
        const auto [s, c] = occ[i];
        if (c > kMaxCount) throw std::domain_error("enumerate_exact: per-site count too large");
        const auto& binom = choose_table()[static_cast<std::size_t>(c)];
        for (std::int64_t r = 0; r <= c; ++r) {
            const double weight =
                binom[static_cast<std::size_t>(r)] *
                std::pow(p, static_cast<double>(r)) *
                std::pow(1.0 - p, static_cast<double>(c - r));
            if (weight == 0.0) continue;
            at(s + 1) += r;
            at(s - 1) += c - r;
            dfs(i + 1, w * weight);
            at(s + 1) -= r;
            at(s - 1) -= c - r;
        }
    }

    void finish(double w) {
        const std::int64_t new_m = at(m - 1) > 0 ? m - 1 : m + 1;
        const std::int64_t new_M = at(M + 1) > 0 ? M + 1 : M - 1;
        std::int64_t wake_right = 0, wake_left = 0;
        std::int64_t nright = right, nleft = left;

        if (process == Process::Modified || process == Process::ModifiedRightFront) {
            if (new_M > M) {
                wake_right = 1;
                nright = std::max(nright, new_M);
            }
        } else {
            if (new_M == right + 1) {
                wake_right = 1;
                nright = new_M;
            }
        }
        if (new_m < left) {
            nleft = new_m;
            if (process == Process::Standard || process == Process::Modified) wake_left = 1;
        }

        Pattern out;
        out.lo = new_m;
        out.counts.assign(static_cast<std::size_t>(new_M - new_m + 1), 0);
        for (std::int64_t s = new_m; s <= new_M; ++s)
            out.counts[static_cast<std::size_t>(s - new_m)] = at(s);
        out.counts.front() += wake_left;
        out.counts.back() += wake_right;
        out.left = nleft;
        out.right = nright;
        (*next)[std::move(out)] += w;
    }
};

}  // namespace

Process process_of(Variant v) {
    switch (v) {
        case Variant::Standard: return Process::Standard;
        case Variant::NonNegative: return Process::NonNegative;
        case Variant::Modified: return Process::Modified;
    }
    return Process::Standard;
}

std::int64_t Pattern::total() const {
    std::int64_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

Pattern pattern_of(const World& w) {
    Pattern out;
    out.lo = w.min_site();
    out.counts.assign(static_cast<std::size_t>(w.max_site() - w.min_site() + 1), 0);
    for (const auto& [s, c] : w.occupied())
        out.counts[static_cast<std::size_t>(s - out.lo)] = c;
    out.left = w.left_visited();
    out.right = w.right_visited();
    return out;
}

ExactDistribution enumerate_exact(Process process, Drift p, int n) {
    if (n < 0) throw std::invalid_argument("enumerate_exact: negative horizon");
    if (n > kMaxHorizon)
        throw std::domain_error(
            "enumerate_exact: horizon " + std::to_string(n) + " refused; each step branches over "
            "all per-site splits and the outcome count grows beyond the 10^7-branch guard past n = " +
            std::to_string(kMaxHorizon));

    std::map<Pattern, double> frontier;
    frontier[Pattern{0, {1}, 0, 0}] = 1.0;
    long long branches = 0;

    for (int t = 0; t < n; ++t) {
        std::map<Pattern, double> next;
        Expander ex{process, p.p, &next, &branches, 0, 0, 0, 0, {}, {}};
        for (const auto& [pat, prob] : frontier) ex.run(pat, prob);
        frontier.swap(next);
    }

    ExactDistribution dist{process, p.p, n, {}, 0.0};
    dist.entries.reserve(frontier.size());
    double sum = 0.0, carry = 0.0;
    for (auto& [pat, prob] : frontier) {
        const double term = prob - carry;
        const double t2 = sum + term;
        carry = (t2 - sum) - term;
        sum = t2;
        dist.entries.push_back(Outcome{pat, prob});
    }
    dist.total_probability = sum;
    return dist;
}

std::vector<double> verify_recursions(Drift p, int n, int K) {
    if (!(p.p > 0.5 && p.p < 1.0))
        throw std::domain_error("verify_recursions: p must lie in (1/2, 1)");
    if (K < 0) throw std::invalid_argument("verify_recursions: negative K");

    const auto dist_n = enumerate_exact(Process::ModifiedRightFront, p, n);
    const auto dist_n1 = enumerate_exact(Process::ModifiedRightFront, p, n + 1);
    const double q = 1.0 - p.p;

    std::vector<double> residuals;
    residuals.reserve(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        const double lhs = dist_n1.expectation(
            [&](const Pattern& st) { return static_cast<double>(st.profile(k)); });
        double rhs = 0.0;
        if (k == 0) {
            rhs = dist_n.expectation([&](const Pattern& st) {
                      const double a0 = static_cast<double>(st.profile(0));
                      const double a1 = static_cast<double>(st.profile(1));
                      return std::pow(q, a0) * (a0 + p.p * a1 - 1.0);
                  }) +
                  p.p * dist_n.expectation(
                            [](const Pattern& st) { return static_cast<double>(st.profile(0)); }) +
                  1.0;
        } else if (k == 1) {
            rhs = dist_n.expectation([&](const Pattern& st) {
                const double a0 = static_cast<double>(st.profile(0));
                const double a1 = static_cast<double>(st.profile(1));
                const double a2 = static_cast<double>(st.profile(2));
                return std::pow(q, a0) * (p.p * a2 - (2.0 * p.p - 1.0) * a1 - a0) +
                       q * a0 + p.p * a1;
            });
        } else {
            rhs = dist_n.expectation([&](const Pattern& st) {
                const double a0 = static_cast<double>(st.profile(0));
                const double ak = static_cast<double>(st.profile(k));
                const double akm = static_cast<double>(st.profile(k - 1));
                const double akp = static_cast<double>(st.profile(k + 1));
                return std::pow(q, a0) * (p.p * akp - (2.0 * p.p - 1.0) * ak - q * akm) +
                       q * akm + p.p * ak;
            });
        }
        residuals.push_back(std::abs(lhs - rhs));
    }
    return residuals;
}

double modified_k0_correction(Drift p, int n) {
    const auto dist = enumerate_exact(Process::Modified, p, n);
    return dist.expectation([&](const Pattern& st) {
        const bool single_site = st.counts.size() == 1;
        const bool left_unvisited = st.lo == st.left;
        if (!(single_site && left_unvisited)) return 0.0;
        return std::pow(1.0 - p.p, static_cast<double>(st.profile(0)));
    });
}

}  // namespace frog::oracle
