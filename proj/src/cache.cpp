#include "riders/cache.hpp"

#include <fstream>
#include <sstream>

namespace riders {

namespace {

long parse_long_field(const std::string& s, const std::string& line) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw CorruptCache("bad numeric field '" + s + "' in cache line: " + line);
}

}  // namespace

CacheStore CacheStore::load(const std::string& path) {
    CacheStore store(path);
    std::ifstream in(path);
    if (!in) return store;  // created lazily on save

    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line == "piece,q,n,count") continue;
        }
        // piece text contains commas; q, n, count never do
        const auto c3 = line.rfind(',');
        const auto c2 = c3 == std::string::npos ? c3 : line.rfind(',', c3 - 1);
        const auto c1 = c2 == std::string::npos || c2 == 0 ? std::string::npos : line.rfind(',', c2 - 1);
        if (c1 == std::string::npos || c2 == std::string::npos || c3 == std::string::npos)
            throw CorruptCache("unparseable cache line: " + line);
        const std::string piece = line.substr(0, c1);
        const long q = parse_long_field(line.substr(c1 + 1, c2 - c1 - 1), line);
        const long n = parse_long_field(line.substr(c2 + 1, c3 - c2 - 1), line);
        Integer count;
        try {
            count = Integer(line.substr(c3 + 1));
        } catch (const std::exception&) {
            throw CorruptCache("bad count in cache line: " + line);
        }
        const Key key{piece, q, n};
        auto it = store.entries_.find(key);
        if (it != store.entries_.end()) {
            if (it->second != count)
                throw CorruptCache("conflicting duplicate for " + piece + ",q=" + std::to_string(q) +
                                   ",n=" + std::to_string(n));
            continue;
        }
        store.entries_.emplace(key, std::move(count));
    }
    store.dirty_ = false;
    return store;
}

const Integer* CacheStore::find(const std::string& piece, long q, long n) const {
    auto it = entries_.find(Key{piece, q, n});
    return it == entries_.end() ? nullptr : &it->second;
}

void CacheStore::put(const CountRecord& record) {
    const Key key{record.piece, record.q, record.n};
    auto it = entries_.find(key);
    if (it != entries_.end()) {
        if (it->second != record.count)
            throw CorruptCache("recomputed count for " + record.piece + ",q=" +
                               std::to_string(record.q) + ",n=" + std::to_string(record.n) +
                               " is " + record.count.str() + " but cache holds " +
                               it->second.str());
        return;
    }
    entries_.emplace(key, record.count);
    dirty_ = true;
}

void CacheStore::save() const {
    if (path_.empty()) return;
    std::ofstream out(path_, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + path_);
    out << "piece,q,n,count\n";
    for (const auto& [key, count] : entries_) {
        const auto& [piece, q, n] = key;
        out << piece << ',' << q << ',' << n << ',' << count << '\n';
    }
    dirty_ = false;
}

}  // namespace riders
