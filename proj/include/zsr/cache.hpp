#pragma once

#include <map>
#include <string>
#include <vector>

#include "zsr/group.hpp"
#include "zsr/serialize.hpp"
#include "zsr/zerosum.hpp"

namespace zsr {

inline constexpr int kCacheVersion = 1;

/// Persistent store of computed invariants, one record per isomorphism class.
struct CacheDocument {
    int version = kCacheVersion;
    std::map<Group, InvariantRecord> records;

    /// The record for `group`, created empty when absent.
    InvariantRecord& record(const Group& group);
    const InvariantRecord* find(const Group& group) const;

    friend bool operator==(const CacheDocument&, const CacheDocument&) = default;
};

struct CacheLoad {
    CacheDocument doc;
    std::vector<std::string> warnings;
};

/// {"records": [record, ...] in group order, "version": n}
Json to_json(const CacheDocument& doc);

/// Every record is re-validated; records that fail are dropped with a warning.
CacheLoad cache_from_json(const Json& j);

/// A missing file gives an empty cache. An unreadable or malformed file gives
/// an empty cache and a warning.
CacheLoad cache_load(const std::string& path);

/// Writes to a temporary file next to `path` and renames it into place.
/// Throws InternalError when the file cannot be written.
void cache_store(const CacheDocument& doc, const std::string& path);

}  // namespace zsr
