#pragma once

#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace qvc {

// Runs fn(i) for i in [0, count) across worker threads. Each index owns its
// output slot, so callers that write results[i] inside fn and reduce the
// slots sequentially afterwards get schedule-independent results.
// threads == 0 picks hardware concurrency.
template <typename Fn>
void parallel_for_index(std::size_t count, Fn&& fn, unsigned threads = 0) {
    if (count == 0) return;
    unsigned hw = threads ? threads : std::thread::hardware_concurrency();
    if (hw <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(hw, count));
    std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::future<void>> futs;
    futs.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = static_cast<std::size_t>(w) * chunk;
        std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, [lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        }));
    }
    for (auto& f : futs) f.get();
}

} // namespace qvc
