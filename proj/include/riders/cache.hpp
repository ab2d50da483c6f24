// Persistent store of brute-force counts, CSV with header
// `piece,q,n,count`.  The piece field is canonical text and itself
// contains commas, so records are parsed from the right.
#pragma once

#include "riders/enumerate.hpp"
#include "riders/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

namespace riders {

struct CorruptCache : std::runtime_error {
    explicit CorruptCache(const std::string& w) : std::runtime_error(w) {}
};

class CacheStore {
  public:
    using Key = std::tuple<std::string, long, long>;

    CacheStore() = default;
    explicit CacheStore(std::string path) : path_(std::move(path)) {}

    // Missing file is fine (empty store); malformed rows or conflicting
    // duplicates raise CorruptCache.
    static CacheStore load(const std::string& path);

    const Integer* find(const std::string& piece, long q, long n) const;

    // Inserting a key that is already present with a different count is a
    // hard error: it means a recomputation disagreed with the store.
    void put(const CountRecord& record);

    void save() const;

    size_t size() const { return entries_.size(); }
    const std::map<Key, Integer>& entries() const { return entries_; }
    const std::string& path() const { return path_; }
    bool dirty() const { return dirty_; }

  private:
    std::string path_;
    std::map<Key, Integer> entries_;
    mutable bool dirty_ = false;
};

}  // namespace riders
