#include "ehz/parallel.hpp"

#include <atomic>

namespace ehz {

namespace {
std::atomic<int> g_jobs{0};
}

void set_jobs(int jobs) { g_jobs = jobs; }

int jobs() {
    int j = g_jobs.load();
    if (j > 0) return j;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace ehz
