#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "specvol/trec.hpp"

namespace specvol {

class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kCacheHeader = "specvol-cache v1";

/// One file per (curve, g, n): a version header line followed by the JSON
/// serialization. Writes go through a temporary file and a rename; unreadable
/// entries are renamed to *.corrupt and reported as CacheError.
class CorrelatorCache : public CorrelatorStore {
public:
    explicit CorrelatorCache(std::filesystem::path directory);

    /// --cache-dir if given, else $SPECVOL_CACHE, else ./.specvol-cache.
    static std::filesystem::path resolve_directory(const std::optional<std::string>& flag);

    const std::filesystem::path& directory() const { return dir_; }
    std::filesystem::path entry_path(CurveId curve, int g, int n) const;

    std::optional<CorrelationDifferential> load(CurveId curve, int g, int n) override;
    void save(const CorrelationDifferential& w) override;

    /// Cached value if present, otherwise compute() and store it.
    CorrelationDifferential fetch(CurveId curve, int g, int n,
                                  const std::function<CorrelationDifferential()>& compute);

    int hits() const { return hits_; }
    int misses() const { return misses_; }

private:
    [[noreturn]] void quarantine(const std::filesystem::path& path, const std::string& why);

    std::filesystem::path dir_;
    int hits_ = 0;
    int misses_ = 0;
};

}  // namespace specvol
