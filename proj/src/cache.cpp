#include "qsteen/cache.hpp"

#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "qsteen/errors.hpp"

namespace qsteen {

namespace fs = std::filesystem;

namespace {

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

void warn(std::ostream* warnings, const std::string& msg) {
    if (warnings) *warnings << "warning: " << msg << "\n";
}

}  // namespace

std::string cache_key(const JobConfig& cfg) {
    return fmt::format("{:016x}", fnv1a64(config_canonical(cfg) + "|" + kEngineVersion));
}

std::optional<std::string> effective_cache_path(const JobConfig& cfg) {
    if (const char* env = std::getenv("QSTEEN_CACHE"); env && *env) return std::string(env);
    return cfg.cache_path;
}

Report cache_get_or_compute(const JobConfig& cfg, const std::function<Report()>& compute,
                            std::ostream* warnings) {
    auto dir = effective_cache_path(cfg);
    if (!dir) return compute();

    fs::path entry = fs::path(*dir) / fmt::format("qsteen-{}.json", cache_key(cfg));

    std::error_code ec;
    if (fs::exists(entry, ec)) {
        std::ifstream in(entry, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        if (in.good() || in.eof()) {
            try {
                return parse_report(buf.str());
            } catch (const FormatError& e) {
                warn(warnings, fmt::format("cache entry {} unreadable ({}), recomputing",
                                           entry.string(), e.what()));
            }
        } else {
            warn(warnings, fmt::format("cache entry {} unreadable, recomputing", entry.string()));
        }
    }

    Report report = compute();
    std::string bytes = export_bytes(report, OutputFormat::Json);

    fs::create_directories(*dir, ec);
    if (ec) {
        warn(warnings, fmt::format("cache path {} unusable: {}", *dir, ec.message()));
        return report;
    }
    // Write-once via temp + rename so concurrent writers never interleave.
    fs::path tmp = entry;
    tmp += fmt::format(".tmp.{}", ::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << bytes;
        if (!out.good()) {
            warn(warnings, fmt::format("failed writing cache entry {}", tmp.string()));
            fs::remove(tmp, ec);
            return report;
        }
    }
    fs::rename(tmp, entry, ec);
    if (ec) {
        warn(warnings, fmt::format("failed publishing cache entry {}: {}", entry.string(),
                                   ec.message()));
        fs::remove(tmp, ec);
    }
    return report;
}

}  // namespace qsteen
