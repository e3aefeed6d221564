#pragma once

// File-backed result cache.  Keys combine the command name, the canonical
// (sorted) flag list and the tool version, so results from an older build
// are never served.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hb {

inline constexpr const char* kToolVersion = "1.0.0";

class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    static std::string make_key(const std::string& command,
                                std::vector<std::pair<std::string, std::string>> flags,
                                const std::string& version = kToolVersion);

    std::optional<std::string> lookup(const std::string& key);
    void store(const std::string& key, const std::string& bytes);

    std::uint64_t hits() const { return hits_; }
    std::uint64_t misses() const { return misses_; }

private:
    std::filesystem::path file_for(const std::string& key) const;
    std::filesystem::path dir_;
    std::uint64_t hits_ = 0;
    std::uint64_t misses_ = 0;
};

}  // namespace hb
