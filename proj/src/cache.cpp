#include "modcong/cache.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace modcong {

namespace fs = std::filesystem;

std::string cache_path(const std::string& dir, const std::string& name,
                       std::optional<unsigned> n) {
    std::string stem = name;
    // the h:<n> / f:<n> family separator is not filename-friendly
    for (char& c : stem)
        if (c == ':') c = '_';
    if (n) stem += "_" + std::to_string(*n);
    return (fs::path(dir) / (stem + ".json")).string();
}

void write_cached_series(const std::string& dir, const CacheEntry& entry) {
    fs::create_directories(dir);
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Int& c : entry.series.coefficients()) coeffs.push_back(c.get_str());
    nlohmann::json j = {
        {"name", entry.name},
        {"n", entry.n ? nlohmann::json(*entry.n) : nlohmann::json(nullptr)},
        {"prec", entry.series.precision()},
        {"coeffs", coeffs},
    };
    std::ofstream out(cache_path(dir, entry.name, entry.n));
    if (!out) throw BadParameter("cannot write cache file in " + dir);
    out << j.dump(1) << "\n";
}

CacheEntry read_cached_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadParameter("cannot open cache file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw BadParameter("malformed cache file " + path + ": " + e.what());
    }
    if (!j.contains("name") || !j.contains("prec") || !j.contains("coeffs"))
        throw BadParameter("cache file " + path + " is missing required fields");
    CacheEntry entry;
    try {
        entry.name = j.at("name").get<std::string>();
        if (j.contains("n") && !j.at("n").is_null())
            entry.n = j.at("n").get<unsigned>();
        std::size_t prec = j.at("prec").get<std::size_t>();
        std::vector<Int> coeffs;
        coeffs.reserve(j.at("coeffs").size());
        for (const auto& s : j.at("coeffs"))
            coeffs.emplace_back(s.get<std::string>());
        if (coeffs.size() != prec)
            throw BadParameter("cache file " + path + ": prec does not match coeffs");
        entry.series = PowerSeries(std::move(coeffs));
    } catch (const nlohmann::json::exception& e) {
        throw BadParameter("malformed cache file " + path + ": " + e.what());
    } catch (const std::invalid_argument&) {
        throw BadParameter("cache file " + path + " holds a non-decimal coefficient");
    }
    return entry;
}

std::size_t clear_cache(const std::string& dir) {
    std::size_t removed = 0;
    if (!fs::exists(dir)) return 0;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.path().extension() == ".json" && fs::is_regular_file(e.path())) {
            fs::remove(e.path());
            ++removed;
        }
    }
    return removed;
}

} // namespace modcong
