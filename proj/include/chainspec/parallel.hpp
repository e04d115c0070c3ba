#pragma once

#include <cstdlib>
#include <future>
#include <optional>
#include <thread>
#include <vector>

#include "chainspec/errors.hpp"

namespace chainspec {

// Worker count for data-parallel evaluation: CHAINSPEC_THREADS when set
// (0 = auto), else hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("CHAINSPEC_THREADS"); env && *env) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (!end || *end != '\0' || v < 0) throw invalid_input("CHAINSPEC_THREADS must be a nonnegative integer");
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Applies f to every element, splitting the index range into contiguous
// chunks, and returns results in input order.  The outcome is independent
// of the worker count: each item is evaluated by the same pure code path.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, F f) {
    using R = decltype(f(items.front()));
    std::vector<std::optional<R>> slots(items.size());

    unsigned workers = items.size() < 2 ? 1 : worker_count();
    if (workers <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) slots[i] = f(items[i]);
    } else {
        if (workers > items.size()) workers = static_cast<unsigned>(items.size());
        std::vector<std::future<void>> tasks;
        tasks.reserve(workers);
        std::size_t chunk = (items.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t lo = static_cast<std::size_t>(w) * chunk;
            std::size_t hi = std::min(items.size(), lo + chunk);
            if (lo >= hi) break;
            tasks.push_back(std::async(std::launch::async, [&slots, &items, &f, lo, hi]() {
                for (std::size_t i = lo; i < hi; ++i) slots[i] = f(items[i]);
            }));
        }
        for (auto& t : tasks) t.get();
    }

    std::vector<R> out;
    out.reserve(items.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

} // namespace chainspec
