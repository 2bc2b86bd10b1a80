#include <doctest.h>

#include "cgd4/cache.hpp"
#include "cgd4/cg.hpp"
#include "cgd4/suites.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace cgd4;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path p;
    TempDir() {
        p = fs::temp_directory_path() / ("cgd4_test_" + std::to_string(std::rand()) + "_" + std::to_string(::getpid()));
        fs::remove_all(p);
    }
    ~TempDir() { fs::remove_all(p); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
}

}

TEST_CASE("fnv1a64") {
    CHECK(fnv1a64("") == "cbf29ce484222325");
    CHECK(fnv1a64("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a64("foobar") == "85944171f73967e8");
}

TEST_CASE("cache directory resolution") {
    CHECK(resolve_cache_dir("/x/y") == "/x/y");
    const char* old = std::getenv("CGD4_CACHE_DIR");
    std::string saved = old ? old : "";
    ::setenv("CGD4_CACHE_DIR", "/from/env", 1);
    CHECK(resolve_cache_dir("") == "/from/env");
    CHECK(resolve_cache_dir("/flag") == "/flag");
    ::unsetenv("CGD4_CACHE_DIR");
    if (const char* h = std::getenv("HOME"); h && *h) CHECK(resolve_cache_dir("") == std::string(h) + "/.cache/cgd4");
    if (old) ::setenv("CGD4_CACHE_DIR", saved.c_str(), 1);
}

TEST_CASE("cache round trip and invalidation") {
    TempDir t;
    Cache c(t.p.string());
    CHECK_FALSE(c.load("k"));
    CHECK(c.misses == 1);
    c.store("k", "payload text");
    auto got = c.load("k");
    REQUIRE(got);
    CHECK(*got == "payload text");
    CHECK(c.hits == 1);
    CHECK(c.warnings.empty());

    std::string env = slurp(c.path("k"));

    SUBCASE("corrupted payload") {
        auto j = nlohmann::json::parse(env);
        j["payload"] = "payload texT";
        spit(c.path("k"), j.dump());
        CHECK_FALSE(c.load("k"));
        REQUIRE(c.warnings.size() == 1);
        CHECK(c.warnings[0].find("checksum") != std::string::npos);
    }
    SUBCASE("truncated file") {
        spit(c.path("k"), env.substr(0, env.size() / 2));
        CHECK_FALSE(c.load("k"));
        REQUIRE(c.warnings.size() == 1);
        CHECK(c.warnings[0].find("unreadable") != std::string::npos);
    }
    SUBCASE("schema mismatch") {
        auto j = nlohmann::json::parse(env);
        j["schema"] = kCacheSchema + 1;
        spit(c.path("k"), j.dump());
        CHECK_FALSE(c.load("k"));
        REQUIRE(c.warnings.size() == 1);
        CHECK(c.warnings[0].find("schema") != std::string::npos);
    }
    SUBCASE("algorithm version mismatch") {
        auto j = nlohmann::json::parse(env);
        j["hash"] = std::string(content_hash()) + "x";
        spit(c.path("k"), j.dump());
        CHECK_FALSE(c.load("k"));
        REQUIRE(c.warnings.size() == 1);
        CHECK(c.warnings[0].find("algorithm version") != std::string::npos);
    }
}

TEST_CASE("cached Z~ matches a fresh computation") {
    TempDir t;
    TruncSeries fresh = z_tilde(6);
    {
        Cache c(t.p.string());
        CHECK(c.z_tilde(6) == fresh);
        CHECK(c.misses == 1);
    }
    Cache c(t.p.string());
    CHECK(c.z_tilde(6) == fresh);
    CHECK(c.hits == 1);

    /* a corrupted entry is reported and recomputed */
    std::string p = c.path("z_tilde_N6");
    std::string env = slurp(p);
    env[env.size() / 2] = env[env.size() / 2] == '1' ? '2' : '1';
    spit(p, env);
    Cache d(t.p.string());
    CHECK(d.z_tilde(6) == fresh);
    CHECK(d.warnings.size() == 1);
    CHECK(Cache(t.p.string()).load("z_tilde_N6"));
}

TEST_CASE("disabled cache") {
    Cache c;
    CHECK_FALSE(c.enabled());
    c.store("k", "v");
    CHECK_FALSE(c.load("k"));
    CHECK(c.z_tilde(3) == z_tilde(3));
}

TEST_CASE("suite registry") {
    auto& n = suite_names();
    CHECK(n.size() == 8);
    Cache c;
    CHECK_THROWS_AS(run_suite("no-such-suite", RunConfig{}, c), std::invalid_argument);
    RunConfig cfg;
    cfg.order = 8;
    SuiteReport r = run_suite("axioms", cfg, c);
    CHECK(r.pass());
    CHECK(r.checks.size() == 2);
}
