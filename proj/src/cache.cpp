#include "zsr/cache.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "zsr/errors.hpp"

namespace zsr {

InvariantRecord& CacheDocument::record(const Group& group) {
    auto it = records.find(group);
    if (it == records.end()) it = records.emplace(group, InvariantRecord{group, {}, {}, {}, {}}).first;
    return it->second;
}

const InvariantRecord* CacheDocument::find(const Group& group) const {
    const auto it = records.find(group);
    return it == records.end() ? nullptr : &it->second;
}

Json to_json(const CacheDocument& doc) {
    Json recs = Json::array();
    for (const auto& [group, rec] : doc.records) recs.push_back(to_json(rec));
    return Json{{"records", recs}, {"version", doc.version}};
}

CacheLoad cache_from_json(const Json& j) {
    CacheLoad out;
    if (!j.is_object() || !j.contains("version") || !j.at("version").is_number_integer()) {
        out.warnings.push_back("cache document has no version; starting from an empty cache");
        return out;
    }
    if (j.at("version").get<int>() != kCacheVersion) {
        out.warnings.push_back("cache version " + j.at("version").dump() + " not understood; starting from an empty cache");
        return out;
    }
    if (!j.contains("records") || !j.at("records").is_array()) {
        out.warnings.push_back("cache document has no record list; starting from an empty cache");
        return out;
    }
    std::size_t index = 0;
    for (const auto& item : j.at("records")) {
        const std::string where = "cache record " + std::to_string(index++);
        try {
            InvariantRecord rec = record_from_json(item);
            if (item.at("group") != to_json(rec.group)) {
                out.warnings.push_back(where + " dropped: group key " + item.at("group").dump() +
                                       " is not in invariant-factor form");
                continue;
            }
            if (out.doc.records.count(rec.group)) {
                out.warnings.push_back(where + " dropped: duplicate record for " + rec.group.name());
                continue;
            }
            if (const auto problem = validate_record(rec)) {
                out.warnings.push_back(where + " (" + rec.group.name() + ") dropped: " + *problem);
                continue;
            }
            out.doc.records.emplace(rec.group, std::move(rec));
        } catch (const std::exception& e) {
            out.warnings.push_back(where + " dropped: " + e.what());
        }
    }
    return out;
}

CacheLoad cache_load(const std::string& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return {};
    std::ifstream in(path);
    if (!in) return {{}, {"cache file " + path + " is unreadable; starting from an empty cache"}};
    std::stringstream buf;
    buf << in.rdbuf();
    Json j;
    try {
        j = Json::parse(buf.str());
    } catch (const std::exception& e) {
        return {{}, {"cache file " + path + " is not valid JSON; starting from an empty cache"}};
    }
    return cache_from_json(j);
}

void cache_store(const CacheDocument& doc, const std::string& path) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw InternalError("cannot write cache file " + tmp.string());
        out << to_json(doc).dump(2) << '\n';
        out.flush();
        if (!out) {
            std::error_code ignore;
            fs::remove(tmp, ignore);
            throw InternalError("cannot write cache file " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ignore;
        fs::remove(tmp, ignore);
        throw InternalError("cannot replace cache file " + path + ": " + ec.message());
    }
}

}  // namespace zsr
