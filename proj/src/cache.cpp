#include "lsdual/cache.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <regex>
#include <stdexcept>

namespace lsdual {

namespace fs = std::filesystem;

namespace {

const std::regex& entry_pattern() {
    static const std::regex re(R"(^([a-z]+)_([0-9]+)_([0-9]+)_([0-9a-f]{16})\.json$)");
    return re;
}

bool is_temporary(const std::string& name) { return name.rfind(".tmp-", 0) == 0; }

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::string version_hash() {
    std::uint64_t h = 1469598103934665603ULL;
    for (const char* p = kBasisFormatVersion; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

DiskStore::DiskStore(fs::path dir) : dir_(std::move(dir)) {}

fs::path DiskStore::entry_path(const std::string& kind, std::size_t m, std::size_t k) const {
    return dir_ / (kind + "_" + std::to_string(m) + "_" + std::to_string(k) + "_" + version_hash() + ".json");
}

std::optional<Subspace> DiskStore::load(const std::string& kind, std::size_t m, std::size_t k) {
    std::ifstream in(entry_path(kind, m, k));
    if (!in) return std::nullopt;
    // A damaged or foreign file is a miss; the next save replaces it.
    try {
        const Json j = Json::parse(in);
        if (j.at("version") != version_hash() || j.at("kind") != kind || j.at("m") != m || j.at("k") != k) {
            return std::nullopt;
        }
        return subspace_from_json(j.at("payload"));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void DiskStore::save(const std::string& kind, std::size_t m, std::size_t k, const Subspace& s) {
    static std::atomic<unsigned long> counter{0};
    fs::create_directories(dir_);
    const fs::path target = entry_path(kind, m, k);
    const fs::path tmp = dir_ / (".tmp-" + target.filename().string() + "-" + std::to_string(::getpid()) + "-" +
                                 std::to_string(counter++));
    const Json j{{"kind", kind},       {"m", m}, {"k", k}, {"version", version_hash()}, {"created_at", utc_timestamp()},
                 {"payload", to_json(s)}};
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << j.dump() << '\n';
        out.flush();
        if (!out) {
            std::error_code ignored;
            fs::remove(tmp, ignored);
            throw std::runtime_error("cache: cannot write " + tmp.string());
        }
    }
    fs::rename(tmp, target);
}

std::vector<CacheFileInfo> DiskStore::list() const {
    std::vector<CacheFileInfo> out;
    if (!fs::is_directory(dir_)) return out;
    const std::string current = version_hash();
    for (const auto& e : fs::directory_iterator(dir_)) {
        if (!e.is_regular_file()) continue;
        const std::string name = e.path().filename().string();
        std::smatch match;
        if (!std::regex_match(name, match, entry_pattern())) continue;
        CacheFileInfo info;
        info.file = name;
        info.kind = match[1];
        info.m = std::stoul(match[2]);
        info.k = std::stoul(match[3]);
        info.bytes = e.file_size();
        info.stale = match[4] != current;
        out.push_back(std::move(info));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.file < b.file; });
    return out;
}

std::size_t DiskStore::clear() {
    std::size_t removed = 0;
    if (!fs::is_directory(dir_)) return removed;
    std::vector<fs::path> doomed;
    for (const auto& e : fs::directory_iterator(dir_)) {
        const std::string name = e.path().filename().string();
        if (e.is_regular_file() && (std::regex_match(name, entry_pattern()) || is_temporary(name))) doomed.push_back(e.path());
    }
    for (const auto& p : doomed) removed += fs::remove(p) ? 1 : 0;
    return removed;
}

}  // namespace lsdual
