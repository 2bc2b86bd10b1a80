#pragma once

#include "cgd4/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cgd4 {

/* bumped whenever the on-disk layout changes */
inline constexpr int kCacheSchema = 1;
/* hash of the sources that produce cached objects, fixed at configure time */
const char* content_hash();

/* --cache-dir, else $CGD4_CACHE_DIR, else $HOME/.cache/cgd4, else none */
std::string resolve_cache_dir(const std::string& flag);

/* directory of JSON envelopes {schema, hash, kind, checksum, payload}; an
 * empty directory disables caching. Stale or corrupted entries are reported
 * through warnings and treated as missing. */
class Cache {
public:
    explicit Cache(std::string dir = {}) : dir_(std::move(dir)) {}
    bool enabled() const { return !dir_.empty(); }
    const std::string& dir() const { return dir_; }

    std::optional<std::string> load(const std::string& key);
    /* writes through a temporary file and a rename; I/O failure throws std::runtime_error */
    void store(const std::string& key, const std::string& payload);
    std::string path(const std::string& key) const;

    /* z_tilde(order), from the cache when possible */
    TruncSeries z_tilde(int order);

    std::vector<std::string> warnings;
    int hits = 0, misses = 0;

private:
    std::string dir_;
};

/* FNV-1a, as 16 hex digits */
std::string fnv1a64(const std::string& s);

}
