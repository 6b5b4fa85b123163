#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "realhiggs/store.hpp"

namespace realhiggs {

/// Environment variable overriding the cache location.
inline constexpr const char* kCacheDirEnv = "REALHIGGS_CACHE_DIR";

/// $REALHIGGS_CACHE_DIR, else $XDG_CACHE_HOME/realhiggs, else
/// $HOME/.cache/realhiggs, else ./.realhiggs-cache.
std::filesystem::path default_cache_dir();

struct CacheEntryInfo {
    int g = 0;
    int r = 0;
    std::string engine_version;
    int pipeline_version = 0;
    std::string created;
    std::size_t terms = 0;
    std::filesystem::path path;
    bool readable = false;  // false when the header or body failed to parse
    std::string problem;
};

/// Plain-text A_{g,r} store, one file per (g, r). Writes go through a
/// temporary file and a rename so concurrent processes can share a directory.
class DiskCache : public APolyBackend {
public:
    explicit DiskCache(std::filesystem::path dir);

    std::optional<APoly> load(int g, int r) override;
    void save(const APoly& a) override;

    std::vector<CacheEntryInfo> list() const;
    /// Removes every entry; returns how many files were deleted.
    std::size_t clear();
    std::filesystem::path entry_path(int g, int r) const;
    const std::filesystem::path& dir() const { return dir_; }

    /// Parses one entry file, ignoring versions. Throws InvalidInput when the
    /// file is malformed.
    static APoly read_entry(const std::filesystem::path& path, CacheEntryInfo* info = nullptr);

private:
    std::filesystem::path dir_;
};

}  // namespace realhiggs
