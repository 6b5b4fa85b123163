#include "realhiggs/cache.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "realhiggs/errors.hpp"
#include "realhiggs/version.hpp"

namespace fs = std::filesystem;

namespace realhiggs {

namespace {

constexpr const char* kMagic = "realhiggs-cache 1";

std::string now_utc() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

bool is_entry_name(const fs::path& p) {
    std::string name = p.filename().string();
    return name.rfind("A_g", 0) == 0 && p.extension() == ".txt";
}

}  // namespace

fs::path default_cache_dir() {
    if (const char* dir = std::getenv(kCacheDirEnv); dir && *dir) return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "realhiggs";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "realhiggs";
    return ".realhiggs-cache";
}

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path DiskCache::entry_path(int g, int r) const {
    return dir_ / ("A_g" + std::to_string(g) + "_r" + std::to_string(r) + ".txt");
}

APoly DiskCache::read_entry(const fs::path& path, CacheEntryInfo* info) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    CacheEntryInfo local;
    CacheEntryInfo& e = info ? *info : local;
    e.path = path;
    std::string line;
    if (!std::getline(in, line) || line != kMagic) throw InvalidInput("bad header in " + path.string());
    std::size_t arity = 0;
    bool have_g = false, have_r = false, have_arity = false;
    std::string body;
    while (std::getline(in, line)) {
        if (line == "---") {
            std::getline(in, body);
            break;
        }
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "g") {
            have_g = static_cast<bool>(ls >> e.g);
        } else if (key == "r") {
            have_r = static_cast<bool>(ls >> e.r);
        } else if (key == "engine_version") {
            ls >> e.engine_version;
        } else if (key == "pipeline_version") {
            ls >> e.pipeline_version;
        } else if (key == "created") {
            ls >> e.created;
        } else if (key == "arity") {
            have_arity = static_cast<bool>(ls >> arity);
        }
    }
    if (!have_g || !have_r || !have_arity || body.empty())
        throw InvalidInput("incomplete cache entry " + path.string());
    if (arity != arity_for_genus(e.g)) throw InvalidInput("arity does not match genus in " + path.string());
    LaurentPoly value(arity);
    try {
        value = LaurentPoly::parse(body, arity);
    } catch (const std::exception& ex) {
        throw InvalidInput("unparseable polynomial in " + path.string() + ": " + ex.what());
    }
    e.terms = value.size();
    e.readable = true;
    return APoly{std::move(value), e.g, e.r};
}

std::optional<APoly> DiskCache::load(int g, int r) {
    fs::path p = entry_path(g, r);
    std::error_code ec;
    if (!fs::exists(p, ec)) return std::nullopt;
    CacheEntryInfo info;
    try {
        APoly a = read_entry(p, &info);
        if (info.engine_version != kEngineVersion || info.pipeline_version != kPipelineVersion) return std::nullopt;
        if (a.g != g || a.r != r) return std::nullopt;
        return a;
    } catch (const InvalidInput&) {
        return std::nullopt;
    }
}

void DiskCache::save(const APoly& a) {
    static std::atomic<unsigned> counter{0};
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) return;  // an unwritable cache only costs recomputation
    std::ostringstream name;
    name << ".tmp-" << ::getpid() << "-" << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "-"
         << counter++;
    fs::path tmp = dir_ / name.str();
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return;
        out << kMagic << "\n"
            << "g " << a.g << "\n"
            << "r " << a.r << "\n"
            << "engine_version " << kEngineVersion << "\n"
            << "pipeline_version " << kPipelineVersion << "\n"
            << "created " << now_utc() << "\n"
            << "arity " << a.value.arity() << "\n"
            << "---\n"
            << a.value.to_string() << "\n";
        if (!out) {
            out.close();
            fs::remove(tmp, ec);
            return;
        }
    }
    fs::rename(tmp, entry_path(a.g, a.r), ec);
    if (ec) fs::remove(tmp, ec);
}

std::vector<CacheEntryInfo> DiskCache::list() const {
    std::vector<CacheEntryInfo> out;
    std::error_code ec;
    if (!fs::is_directory(dir_, ec)) return out;
    for (const auto& de : fs::directory_iterator(dir_, ec)) {
        if (!de.is_regular_file() || !is_entry_name(de.path())) continue;
        CacheEntryInfo info;
        info.path = de.path();
        try {
            read_entry(de.path(), &info);
        } catch (const InvalidInput& ex) {
            info.readable = false;
            info.problem = ex.what();
        }
        out.push_back(std::move(info));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.path < y.path; });
    return out;
}

std::size_t DiskCache::clear() {
    std::size_t n = 0;
    std::error_code ec;
    if (!fs::is_directory(dir_, ec)) return 0;
    std::vector<fs::path> victims;
    for (const auto& de : fs::directory_iterator(dir_, ec)) {
        std::string name = de.path().filename().string();
        if (de.is_regular_file() && (is_entry_name(de.path()) || name.rfind(".tmp-", 0) == 0))
            victims.push_back(de.path());
    }
    for (const auto& p : victims)
        if (fs::remove(p, ec)) ++n;
    return n;
}

}  // namespace realhiggs
