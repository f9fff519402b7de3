#pragma once

#include <optional>
#include <string>

namespace ehz {

/// File cache rooted at $EHL_CACHE_DIR, keyed by a content hash of the
/// request string. Disabled (all misses, stores dropped) when the variable
/// is unset.
class Cache {
public:
    static bool enabled();
    static std::optional<std::string> get(const std::string& request);
    static void put(const std::string& request, const std::string& payload);
    static std::string hash_key(const std::string& request); // FNV-1a 64, hex
};

} // namespace ehz
