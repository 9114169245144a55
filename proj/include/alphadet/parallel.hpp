#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace alphadet {

namespace detail {
inline std::atomic<unsigned>& worker_count_ref()
{
    static std::atomic<unsigned> count{1};
    return count;
}
} // namespace detail

/// Number of threads used by the heavy permutation sums. Defaults to 1.
inline unsigned workers() { return detail::worker_count_ref().load(std::memory_order_relaxed); }
inline void set_workers(unsigned n) { detail::worker_count_ref().store(std::max(1u, n), std::memory_order_relaxed); }

/// Splits [0, total) into contiguous chunks, folds each chunk into its own
/// accumulator with `body(first, last, acc)`, then merges the accumulators in
/// chunk order with `merge(into, from)`. With exact arithmetic the result does
/// not depend on the worker count.
template <class Acc, class MakeAcc, class Body, class Merge>
Acc parallel_range_reduce(std::uint64_t total, MakeAcc make_acc, Body body, Merge merge)
{
    const unsigned w = static_cast<unsigned>(std::min<std::uint64_t>(workers(), std::max<std::uint64_t>(total, 1)));
    if (w <= 1) {
        Acc acc = make_acc();
        if (total > 0)
            body(std::uint64_t{0}, total, acc);
        return acc;
    }
    std::vector<Acc> parts;
    parts.reserve(w);
    for (unsigned i = 0; i < w; ++i)
        parts.push_back(make_acc());
    std::vector<std::exception_ptr> errors(w);
    {
        std::vector<std::jthread> pool;
        pool.reserve(w);
        for (unsigned i = 0; i < w; ++i) {
            const std::uint64_t first = total * i / w;
            const std::uint64_t last = total * (i + 1) / w;
            pool.emplace_back([&, i, first, last] {
                try {
                    body(first, last, parts[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    Acc result = std::move(parts[0]);
    for (unsigned i = 1; i < w; ++i)
        merge(result, parts[i]);
    return result;
}

} // namespace alphadet
