#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace ehz {

/// Worker-count knob for the enumeration-heavy loops. 0 means "use
/// hardware_concurrency". Results never depend on the setting: work is
/// partitioned by index and reduced in index order.
void set_jobs(int jobs);
int jobs();

/// Evaluate f(0..count-1) across workers; results land at their index.
template <typename T>
std::vector<T> parallel_map(size_t count, const std::function<T(size_t)>& f) {
    std::vector<T> out(count);
    int workers = jobs();
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) out[i] = f(i);
        return out;
    }
    std::vector<std::thread> pool;
    size_t stride = static_cast<size_t>(workers);
    for (size_t w = 0; w < stride; ++w)
        pool.emplace_back([&, w]() {
            for (size_t i = w; i < count; i += stride) out[i] = f(i);
        });
    for (auto& t : pool) t.join();
    return out;
}

} // namespace ehz
