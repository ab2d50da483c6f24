#include "riders/cache.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace riders;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("riders_test_" + name) { std::remove(path.c_str()); }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("missing cache file loads empty") {
    TempFile tmp("missing.csv");
    const CacheStore store = CacheStore::load(tmp.path);
    CHECK(store.size() == 0);
    CHECK(store.find("Q", 2, 3) == nullptr);
}

TEST_CASE("cache round trip keeps piece text with commas and semicolons") {
    TempFile tmp("roundtrip.csv");
    CacheStore store(tmp.path);
    store.put({"1,0;-1,1;0,1;1,1", 2, 6, Integer(340)});
    store.put({"1,2", 3, 3, Integer(70)});
    store.put({"1,2", 3, 3, Integer(70)});  // identical duplicate is fine
    store.save();

    const CacheStore back = CacheStore::load(tmp.path);
    CHECK(back.size() == 2);
    REQUIRE(back.find("1,0;-1,1;0,1;1,1", 2, 6) != nullptr);
    CHECK(*back.find("1,0;-1,1;0,1;1,1", 2, 6) == 340);
    CHECK(*back.find("1,2", 3, 3) == 70);
}

TEST_CASE("conflicting recomputation is a hard error") {
    TempFile tmp("conflict.csv");
    CacheStore store(tmp.path);
    store.put({"Q", 2, 4, Integer(44)});
    CHECK_THROWS_AS(store.put({"Q", 2, 4, Integer(45)}), CorruptCache);
}

TEST_CASE("corrupt files are rejected") {
    TempFile tmp("corrupt.csv");
    {
        std::ofstream out(tmp.path);
        out << "piece,q,n,count\nQ,2,4,44\nQ,2,4,45\n";
    }
    CHECK_THROWS_AS(CacheStore::load(tmp.path), CorruptCache);
    {
        std::ofstream out(tmp.path, std::ios::trunc);
        out << "piece,q,n,count\nnot a record\n";
    }
    CHECK_THROWS_AS(CacheStore::load(tmp.path), CorruptCache);
    {
        std::ofstream out(tmp.path, std::ios::trunc);
        out << "piece,q,n,count\nQ,2,four,44\n";
    }
    CHECK_THROWS_AS(CacheStore::load(tmp.path), CorruptCache);
}
