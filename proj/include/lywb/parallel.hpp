#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace lywb {

// Worker bound from LYWB_THREADS, else the hardware concurrency; always at least 1.
int worker_count();

// Runs work(item, out_item) for item in [0, count) on up to worker_count() threads.
// Per-item outputs are concatenated in item order, so the result never depends on scheduling.
template <class T, class Work>
std::vector<T> parallel_collect(int count, Work work) {
    std::vector<std::vector<T>> parts(count);
    int workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) work(i, parts[i]);
    } else {
        std::atomic<int> next{0};
        std::exception_ptr failure;
        std::atomic<bool> failed{false};
        auto run = [&] {
            for (int i = next++; i < count && !failed; i = next++) {
                try {
                    work(i, parts[i]);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        };
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run);
        pool.clear();
        if (failure) std::rethrow_exception(failure);
    }
    std::vector<T> out;
    for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return out;
}

}  // namespace lywb
