#pragma once

#include "lsdual/verify.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace lsdual {

/// Bumped whenever a stored basis could change; old entries are then ignored.
inline constexpr const char* kBasisFormatVersion = "lsdual-bases/1";

/// 16 hex digits of FNV-1a over kBasisFormatVersion.
std::string version_hash();

struct CacheFileInfo {
    std::string file;
    std::string kind;
    std::size_t m = 0;
    std::size_t k = 0;
    std::uintmax_t bytes = 0;
    /// Written by a different version; never loaded.
    bool stale = false;
};

/// One JSON file per (kind, m, k, version) in a flat directory.
/// Writes go to a temporary file that is renamed into place.
class DiskStore : public BasisStore {
public:
    explicit DiskStore(std::filesystem::path dir);

    std::optional<Subspace> load(const std::string& kind, std::size_t m, std::size_t k) override;
    void save(const std::string& kind, std::size_t m, std::size_t k, const Subspace& s) override;

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path entry_path(const std::string& kind, std::size_t m, std::size_t k) const;

    /// Entries in file-name order; an absent directory has none.
    std::vector<CacheFileInfo> list() const;
    /// Removes every cache entry and leftover temporary; returns the count.
    std::size_t clear();

private:
    std::filesystem::path dir_;
};

}  // namespace lsdual
