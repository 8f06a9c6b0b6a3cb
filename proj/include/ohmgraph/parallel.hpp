#pragma once

#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace ohmgraph {

inline bool parallel_disabled() {
    const char* v = std::getenv("OHMGRAPH_NO_PARALLEL");
    return v != nullptr && v[0] == '1';
}

/// Applies fn(i) for i in [0, count) and collects results by index, so the
/// output is deterministic regardless of scheduling. Falls back to a plain
/// loop when OHMGRAPH_NO_PARALLEL=1 or the work is small.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, Fn fn) {
    std::vector<T> out(count);
    const unsigned hw = std::thread::hardware_concurrency();
    if (parallel_disabled() || hw <= 1 || count < 64) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    const std::size_t chunks = std::min<std::size_t>(hw, 8);
    std::vector<std::future<void>> futs;
    for (std::size_t c = 0; c < chunks; ++c) {
        futs.push_back(std::async(std::launch::async, [&, c] {
            for (std::size_t i = c; i < count; i += chunks) out[i] = fn(i);
        }));
    }
    for (auto& f : futs) f.get();
    return out;
}

}  // namespace ohmgraph
