#ifndef QSTEEN_CACHE_HPP
#define QSTEEN_CACHE_HPP

#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include "qsteen/report.hpp"

namespace qsteen {

inline constexpr const char* kEngineVersion = "1.0.0";

// Stable content key: 64-bit FNV-1a over the canonical config string plus
// the engine version, as fixed-width hex.
std::string cache_key(const JobConfig& cfg);

// Cache directory to use: the QSTEEN_CACHE environment variable overrides
// whatever the config carries; nullopt disables caching.
std::optional<std::string> effective_cache_path(const JobConfig& cfg);

/* Serve the report for cfg from the cache when possible. Entries are the
 * JSON export of the report, written once via a temp file and atomic rename
 * (concurrent writers race harmlessly to identical bytes). Any IO or parse
 * problem is reported on `warnings` and the result is computed directly —
 * cache trouble never fails a job. */
Report cache_get_or_compute(const JobConfig& cfg, const std::function<Report()>& compute,
                            std::ostream* warnings = nullptr);

}  // namespace qsteen

#endif
