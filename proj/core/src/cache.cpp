#include "specvol/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "specvol/io.hpp"

namespace specvol {

namespace fs = std::filesystem;

CorrelatorCache::CorrelatorCache(fs::path directory)
    : dir_(std::move(directory))
{
}

fs::path CorrelatorCache::resolve_directory(const std::optional<std::string>& flag)
{
    if (flag && !flag->empty()) return *flag;
    if (const char* env = std::getenv("SPECVOL_CACHE"); env && *env) return env;
    return ".specvol-cache";
}

fs::path CorrelatorCache::entry_path(CurveId curve, int g, int n) const
{
    return dir_ / (curve_name(curve) + "_g" + std::to_string(g) + "_n" + std::to_string(n) + ".json");
}

void CorrelatorCache::quarantine(const fs::path& path, const std::string& why)
{
    fs::path target = path;
    target += ".corrupt";
    std::error_code ec;
    fs::rename(path, target, ec);
    throw CacheError("corrupt cache entry " + path.string() + " (" + why + ")" +
                     (ec ? "; could not quarantine: " + ec.message() : "; moved to " + target.string()));
}

std::optional<CorrelationDifferential> CorrelatorCache::load(CurveId curve, int g, int n)
{
    fs::path path = entry_path(curve, g, n);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ++misses_;
        return std::nullopt;
    }
    std::string header;
    std::getline(in, header);
    if (header != kCacheHeader) {
        in.close();
        quarantine(path, "unknown header");
    }
    std::stringstream body;
    body << in.rdbuf();
    in.close();
    CorrelationDifferential w;
    try {
        w = differential_from_json(body.str());
    } catch (const FormatError& e) {
        quarantine(path, e.what());
    }
    if (w.curve != curve || w.g != g || w.n != n) quarantine(path, "entry describes a different correlator");
    ++hits_;
    return w;
}

void CorrelatorCache::save(const CorrelationDifferential& w)
{
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw CacheError("cannot create cache directory " + dir_.string() + ": " + ec.message());
    fs::path path = entry_path(w.curve, w.g, w.n);
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CacheError("cannot write " + tmp.string());
        out << kCacheHeader << '\n' << to_json(w) << '\n';
        if (!out.flush()) throw CacheError("short write to " + tmp.string());
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw CacheError("cannot publish " + path.string() + ": " + ec.message());
    }
}

CorrelationDifferential CorrelatorCache::fetch(CurveId curve, int g, int n,
                                               const std::function<CorrelationDifferential()>& compute)
{
    if (auto cached = load(curve, g, n)) return std::move(*cached);
    CorrelationDifferential w = compute();
    save(w);
    return w;
}

}  // namespace specvol
