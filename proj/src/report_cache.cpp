#include "gca/report_cache.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace gca {

std::string ReportCache::digest(const std::string& request) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : request) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::filesystem::path ReportCache::entry_path(const std::string& request) const {
    return dir_ / (digest(request) + ".json");
}

std::optional<std::string> ReportCache::load(const std::string& request) const {
    if (!enabled()) return std::nullopt;
    const auto path = entry_path(request);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        const auto wrapper = nlohmann::ordered_json::parse(buffer.str());
        if (wrapper.at("request").get<std::string>() != request) return std::nullopt;
        return wrapper.at("payload").get<std::string>();
    } catch (const std::exception& e) {
        std::cerr << "warning: corrupt cache entry " << path.string() << " (" << e.what()
                  << "), recomputing\n";
        return std::nullopt;
    }
}

void ReportCache::store(const std::string& request, const std::string& payload) const {
    if (!enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    nlohmann::ordered_json wrapper;
    wrapper["request"] = request;
    wrapper["payload"] = payload;
    std::ofstream out(entry_path(request), std::ios::trunc);
    out << wrapper.dump(2) << "\n";
}

}  // namespace gca
