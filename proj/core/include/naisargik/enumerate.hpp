#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "naisargik/errors.hpp"
#include "naisargik/limits.hpp"
#include "naisargik/word.hpp"

namespace naisargik {

/// q^n, or throws ResourceError if it exceeds `limits.max_enumeration`.
inline std::uint64_t checked_space_size(unsigned q, std::size_t n, const Limits& limits) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > limits.max_enumeration / q) {
            throw ResourceError("enumerating Z_" + std::to_string(q) + "^" + std::to_string(n) +
                                " exceeds the guard of " +
                                std::to_string(limits.max_enumeration) + " words");
        }
        total *= q;
    }
    if (total > limits.max_enumeration) {
        throw ResourceError("enumeration exceeds the guard of " +
                            std::to_string(limits.max_enumeration) + " words");
    }
    return total;
}

/// Runs task(chunk_index) for chunk_index in [0, chunks) on up to `workers` threads.
/// Callers write into per-chunk slots and merge in chunk order.
template <class Task>
void run_chunks(std::size_t chunks, unsigned workers, Task&& task) {
    const std::size_t threads = std::min<std::size_t>(std::max(1u, workers), chunks);
    if (threads <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) task(c);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t c = t; c < chunks; c += threads) task(c);
        });
    }
    for (auto& th : pool) th.join();
}

/// Visits ranks [begin, end) of Z_q^n in lexicographic order (rank 0 = all
/// zeros), calling visit(rank, digits) with a span of n digits.
template <class Visit>
void for_each_word_in_range(unsigned q, std::size_t n, std::uint64_t begin, std::uint64_t end,
                            Visit&& visit) {
    std::vector<Word::Symbol> digits(n, 0);
    std::uint64_t r = begin;
    for (std::size_t i = n; i-- > 0;) {
        digits[i] = static_cast<Word::Symbol>(r % q);
        r /= q;
    }
    for (std::uint64_t rank = begin; rank < end; ++rank) {
        visit(rank, std::span<const Word::Symbol>(digits));
        for (std::size_t i = n; i-- > 0;) {
            if (++digits[i] < q) break;
            digits[i] = 0;
        }
    }
}

/// Number of chunks for_each_word_chunked will use for a space of `total` words.
inline std::size_t chunk_count(std::uint64_t total, const Limits& limits) {
    if (limits.workers <= 1 || total == 0) return 1;
    return static_cast<std::size_t>(std::min<std::uint64_t>(total, std::uint64_t{limits.workers} * 4));
}

/// Splits Z_q^n into chunk_count() contiguous rank ranges and calls
/// visit(chunk, rank, digits) for each word. Output is deterministic as long
/// as callers keep per-chunk state and merge it in chunk order.
template <class Visit>
void for_each_word_chunked(unsigned q, std::size_t n, const Limits& limits, Visit&& visit) {
    const std::uint64_t total = checked_space_size(q, n, limits);
    const std::size_t chunks = chunk_count(total, limits);
    run_chunks(chunks, limits.workers, [&](std::size_t c) {
        const std::uint64_t begin = total * c / chunks;
        const std::uint64_t end = total * (c + 1) / chunks;
        for_each_word_in_range(q, n, begin, end,
                               [&](std::uint64_t rank, std::span<const Word::Symbol> digits) {
                                   visit(c, rank, digits);
                               });
    });
}

}  // namespace naisargik
