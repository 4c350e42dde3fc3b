#include "cache.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

namespace hurwitz::cli {

namespace {

std::string hex(std::uint64_t value) {
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(value));
    return buffer;
}

nlohmann::json body(const ResultRecord& record) {
    return {{"key", record.key}, {"value", record.value}, {"meta", record.meta}};
}

std::string utc_now() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

}  // namespace

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string encode_record(const ResultRecord& record) {
    auto line = body(record);
    line["checksum"] = hex(fnv1a(body(record).dump()));
    return line.dump();
}

std::optional<ResultRecord> decode_record(const std::string& line) {
    const auto parsed = nlohmann::json::parse(line, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object()) return std::nullopt;
    if (!parsed.contains("checksum") || !parsed.contains("key") || !parsed.contains("value") ||
        !parsed["checksum"].is_string() || !parsed["key"].is_string()) {
        return std::nullopt;
    }
    ResultRecord record{parsed["key"].get<std::string>(), parsed["value"],
                        parsed.value("meta", nlohmann::json::object())};
    if (hex(fnv1a(body(record).dump())) != parsed["checksum"].get<std::string>()) {
        return std::nullopt;
    }
    return record;
}

ResultCache::ResultCache(std::filesystem::path path, std::ostream& warnings)
    : path_(std::move(path)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) continue;
        if (auto record = decode_record(line)) {
            entries_[record->key] = std::move(record->value);
        } else {
            ++skipped_;
            warnings << "warning: " << path_.string() << ":" << number
                     << ": corrupt cache line skipped\n";
        }
    }
}

std::optional<nlohmann::json> ResultCache::get(const std::string& key) const {
    std::lock_guard lock(mutex_);
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::put(const std::string& key, const nlohmann::json& value,
                      std::uint64_t budget) {
    if (!enabled()) return;
    const ResultRecord record{
        key, value,
        {{"timestamp", utc_now()}, {"budget", budget}, {"version", HURWITZ_TOOL_VERSION}}};
    std::lock_guard lock(mutex_);
    std::ofstream out(path_, std::ios::app);
    if (!out || !(out << encode_record(record) << '\n')) {
        throw IoError("cannot write cache file " + path_.string());
    }
    entries_[key] = value;
}

std::size_t ResultCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

}  // namespace hurwitz::cli
