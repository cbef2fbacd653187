#pragma once

#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frog {

// How replications are executed. Replication is the only parallel axis:
// every replication owns its World and its derived seed, so results are a
// pure function of (seed, config) no matter how the loop is scheduled.
struct ExecPolicy {
    int threads = 0;       // 0 = OpenMP default
    bool parallel = true;  // false = serial reference driver
};

// Serial reference driver; defines what replicate() must produce.
template <typename F>
auto replicate_serial(int reps, F&& body) {
    using R = std::invoke_result_t<F&, int>;
    std::vector<R> out(static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r) out[static_cast<std::size_t>(r)] = body(r);
    return out;
}

// OpenMP driver. Each iteration writes only its own slot; output is
// identical to replicate_serial for any thread count or schedule.
template <typename F>
auto replicate(int reps, const ExecPolicy& exec, F&& body) {
    using R = std::invoke_result_t<F&, int>;
    if (!exec.parallel || reps <= 1) return replicate_serial(reps, body);
    std::vector<R> out(static_cast<std::size_t>(reps));
#ifdef _OPENMP
    const int threads = exec.threads > 0 ? exec.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int r = 0; r < reps; ++r) out[static_cast<std::size_t>(r)] = body(r);
#else
    for (int r = 0; r < reps; ++r) out[static_cast<std::size_t>(r)] = body(r);
#endif
    return out;
}

}  // namespace frog
