#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "heilbronn/cache.hpp"

using namespace hb;
namespace fs = std::filesystem;

TEST_CASE("keys are canonical in flag order") {
    std::string a = ResultCache::make_key("scan", {{"p", "101"}, {"format", "csv"}});
    std::string b = ResultCache::make_key("scan", {{"format", "csv"}, {"p", "101"}});
    CHECK(a == b);
    CHECK(a != ResultCache::make_key("scan", {{"p", "103"}, {"format", "csv"}}));
    CHECK(a != ResultCache::make_key("sum", {{"p", "101"}, {"format", "csv"}}));
    CHECK(a != ResultCache::make_key("scan", {{"p", "101"}, {"format", "csv"}}, "0.9.0"));
}

TEST_CASE("store and lookup round-trip") {
    fs::path dir = fs::temp_directory_path() / "hb_cache_test";
    fs::remove_all(dir);
    ResultCache cache(dir);
    std::string key = ResultCache::make_key("sum", {{"p", "7"}, {"a", "1"}});
    CHECK(!cache.lookup(key).has_value());
    CHECK(cache.misses() == 1);
    std::string payload = "quantity,value\nre,0.116\n";
    cache.store(key, payload);
    auto hit = cache.lookup(key);
    REQUIRE(hit.has_value());
    CHECK(*hit == payload);
    CHECK(cache.hits() == 1);

    // a fresh instance over the same directory sees the entry
    ResultCache again(dir);
    CHECK(again.lookup(key) == payload);
    CHECK(!again.lookup(ResultCache::make_key("sum", {{"p", "7"}, {"a", "2"}})).has_value());

    // binary-safe payloads
    std::string bytes("\x00\x01\xff\n\r,", 6);
    std::string bkey = ResultCache::make_key("blob", {});
    cache.store(bkey, bytes);
    CHECK(cache.lookup(bkey) == bytes);
    fs::remove_all(dir);
}
