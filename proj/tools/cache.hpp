#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hurwitz/errors.hpp"

namespace hurwitz::cli {

// A file or directory the tool cannot read or write.
class IoError : public Error {
public:
    using Error::Error;
};

// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view text);

struct ResultRecord {
    std::string key;
    nlohmann::json value;
    // timestamp, budget, version
    nlohmann::json meta;
};

// One JSON object per line; "checksum" holds the FNV-1a of the record
// serialized without it.
std::string encode_record(const ResultRecord& record);
// Nothing for malformed lines and checksum mismatches.
std::optional<ResultRecord> decode_record(const std::string& line);

// Append-only JSON-lines store.  A default-constructed cache stores nothing.
// Later lines win over earlier ones with the same key.
class ResultCache {
public:
    ResultCache() = default;
    // Loads `path` if it exists; corrupt lines are skipped with a warning.
    // An empty path disables the cache.
    ResultCache(std::filesystem::path path, std::ostream& warnings);

    bool enabled() const { return !path_.empty(); }
    std::optional<nlohmann::json> get(const std::string& key) const;
    // Throws IoError naming the path when the file cannot be written.
    void put(const std::string& key, const nlohmann::json& value, std::uint64_t budget);
    std::size_t size() const;
    std::size_t skipped() const { return skipped_; }

private:
    std::filesystem::path path_;
    std::map<std::string, nlohmann::json> entries_;
    std::size_t skipped_ = 0;
    mutable std::mutex mutex_;
};

}  // namespace hurwitz::cli
