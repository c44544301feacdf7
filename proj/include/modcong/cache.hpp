#ifndef MODCONG_CACHE_HPP
#define MODCONG_CACHE_HPP

#include <optional>
#include <string>

#include "modcong/powerseries.hpp"

namespace modcong {

// Series cache: one JSON file per entry,
//   {"name": str, "n": int|null, "prec": int, "coeffs": [decimal strings]}.
// Decimal strings keep the coefficients exact.

struct CacheEntry {
    std::string name;
    std::optional<unsigned> n;
    PowerSeries series;
};

// Path of the entry file inside `dir` (name.json or name_<n>.json).
std::string cache_path(const std::string& dir, const std::string& name,
                       std::optional<unsigned> n);

void write_cached_series(const std::string& dir, const CacheEntry& entry);

// Throws BadParameter when the file is missing or malformed.
CacheEntry read_cached_series(const std::string& path);

// Removes every *.json in the directory; returns how many were removed.
std::size_t clear_cache(const std::string& dir);

} // namespace modcong

#endif
