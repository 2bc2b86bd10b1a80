#include "cgd4/cache.hpp"

#include "cgd4/cg.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef CGD4_CONTENT_HASH
#define CGD4_CONTENT_HASH "unversioned"
#endif

namespace cgd4 {

namespace fs = std::filesystem;

const char* content_hash() { return CGD4_CONTENT_HASH; }

std::string resolve_cache_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* e = std::getenv("CGD4_CACHE_DIR"); e && *e) return e;
    if (const char* h = std::getenv("HOME"); h && *h) return std::string(h) + "/.cache/cgd4";
    return {};
}

std::string fnv1a64(const std::string& s) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

std::string Cache::path(const std::string& key) const { return (fs::path(dir_) / (key + ".json")).string(); }

std::optional<std::string> Cache::load(const std::string& key) {
    if (!enabled()) return std::nullopt;
    std::string p = path(key);
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        ++misses;
        return std::nullopt;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    std::string why;
    try {
        auto j = nlohmann::json::parse(ss.str());
        if (j.at("schema").get<int>() != kCacheSchema) why = "schema version mismatch";
        else if (j.at("hash").get<std::string>() != content_hash()) why = "built by a different algorithm version";
        else if (j.at("kind").get<std::string>() != key) why = "key mismatch";
        else {
            std::string payload = j.at("payload").get<std::string>();
            if (fnv1a64(payload) != j.at("checksum").get<std::string>()) why = "checksum mismatch";
            else {
                ++hits;
                return payload;
            }
        }
    } catch (const std::exception& e) {
        why = std::string("unreadable (") + e.what() + ")";
    }
    warnings.push_back("cache entry " + p + " " + why + "; recomputing");
    ++misses;
    return std::nullopt;
}

void Cache::store(const std::string& key, const std::string& payload) {
    if (!enabled()) return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw std::runtime_error("cannot create cache directory " + dir_ + ": " + ec.message());
    nlohmann::ordered_json j;
    j["schema"] = kCacheSchema;
    j["hash"] = content_hash();
    j["kind"] = key;
    j["checksum"] = fnv1a64(payload);
    j["payload"] = payload;
    std::string p = path(key), tmp = p + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << j.dump();
        if (!out) throw std::runtime_error("write failed for " + tmp);
    }
    fs::rename(tmp, p, ec);
    if (ec) throw std::runtime_error("cannot rename " + tmp + ": " + ec.message());
}

TruncSeries Cache::z_tilde(int order) {
    std::string key = "z_tilde_N" + std::to_string(order);
    if (auto hit = load(key)) {
        try {
            TruncSeries s = series_from_json(*hit);
            if (s.order() == order) return s;
            warnings.push_back("cache entry " + path(key) + " has the wrong order; recomputing");
        } catch (const std::exception& e) {
            warnings.push_back("cache entry " + path(key) + " does not parse (" + e.what() + "); recomputing");
        }
        --hits;
        ++misses;
    }
    TruncSeries s = cgd4::z_tilde(order);
    try {
        store(key, series_to_json(s));
    } catch (const std::exception& e) {
        warnings.push_back(e.what());
    }
    return s;
}

}
