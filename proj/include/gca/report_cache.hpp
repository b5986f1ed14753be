#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace gca {

// Content-addressed store of rendered reports. Keys are canonical request
// strings; the payload is stored with the request embedded, so a corrupt
// or colliding entry is detected and recomputed. An empty directory
// disables the cache.
class ReportCache {
  public:
    explicit ReportCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    bool enabled() const { return !dir_.empty(); }

    // Returns the stored payload on a clean hit. A corrupt entry warns on
    // stderr and reads as a miss.
    std::optional<std::string> load(const std::string& request) const;
    void store(const std::string& request, const std::string& payload) const;

    static std::string digest(const std::string& request);  // FNV-1a, hex

  private:
    std::filesystem::path entry_path(const std::string& request) const;

    std::filesystem::path dir_;
};

}  // namespace gca
