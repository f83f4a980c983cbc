#ifndef HUGHES_PARALLEL_HPP
#define HUGHES_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hughes {

/// Splits [0, n) into contiguous chunks, one per worker, and runs body(begin, end) on each.
/// Chunk boundaries depend only on n and workers; callers merge per-chunk results in
/// chunk order so the outcome never depends on scheduling.
template <class Body>
void parallel_for(std::size_t n, unsigned workers, Body&& body) {
    workers = std::max(1u, workers);
    if (workers == 1 || n < 2) {
        body(std::size_t{0}, n);
        return;
    }
    const std::size_t chunks = std::min<std::size_t>(workers, n);
    std::vector<std::exception_ptr> errors(chunks);
    {
        std::vector<std::jthread> threads;
        threads.reserve(chunks);
        for (std::size_t c = 0; c < chunks; ++c) {
            const std::size_t begin = n * c / chunks;
            const std::size_t end = n * (c + 1) / chunks;
            threads.emplace_back([&, c, begin, end] {
                try {
                    body(begin, end);
                } catch (...) {
                    errors[c] = std::current_exception();
                }
            });
        }
    }
    for (auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
}

}  // namespace hughes

#endif  // HUGHES_PARALLEL_HPP
