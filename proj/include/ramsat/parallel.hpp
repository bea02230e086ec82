#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace ramsat {

/// Runs `shard(i)` for i in [0, count) over `threads` workers and returns the
/// hit from the smallest shard index that produced one. Shards above the
/// current best are skipped, so the result matches a serial scan whenever each
/// shard reports its own first hit.
template <class T, class Shard>
std::optional<T> first_hit(std::size_t count, unsigned threads, Shard&& shard)
{
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            if (auto hit = shard(i))
                return hit;
        return std::nullopt;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::vector<std::optional<T>> hits(count);
    std::mutex error_mutex;
    std::exception_ptr error;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || i > best.load())
                return;
            try {
                if (auto hit = shard(i)) {
                    hits[i] = std::move(hit);
                    std::size_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                }
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                best.store(0);
                return;
            }
        }
    };

    std::vector<std::jthread> pool;
    const unsigned n = std::min<std::size_t>(threads, count);
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t)
        pool.emplace_back(worker);
    pool.clear();

    if (error)
        std::rethrow_exception(error);
    const std::size_t b = best.load();
    if (b < count)
        return std::move(hits[b]);
    return std::nullopt;
}

/// Sums `shard(i)` over i in [0, count); the reduction is order independent.
template <class Shard>
std::uint64_t parallel_sum(std::size_t count, unsigned threads, Shard&& shard)
{
    if (threads <= 1 || count <= 1) {
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < count; ++i)
            total += shard(i);
        return total;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> total{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                total.fetch_add(shard(i));
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
            pool.emplace_back(worker);
    }
    if (error)
        std::rethrow_exception(error);
    return total.load();
}

}  // namespace ramsat
