#include "ehz/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ehz {

namespace {

const char* cache_dir() { return std::getenv("EHL_CACHE_DIR"); }

} // namespace

bool Cache::enabled() { return cache_dir() != nullptr; }

std::string Cache::hash_key(const std::string& request) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : request) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::optional<std::string> Cache::get(const std::string& request) {
    const char* dir = cache_dir();
    if (!dir) return std::nullopt;
    std::filesystem::path path = std::filesystem::path(dir) / (hash_key(request) + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void Cache::put(const std::string& request, const std::string& payload) {
    const char* dir = cache_dir();
    if (!dir) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;
    std::filesystem::path path = std::filesystem::path(dir) / (hash_key(request) + ".json");
    std::ofstream out(path);
    out << payload;
}

} // namespace ehz
