#include "heilbronn/cache.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hb {

namespace {

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::string ResultCache::make_key(const std::string& command,
                                  std::vector<std::pair<std::string, std::string>> flags,
                                  const std::string& version) {
    std::sort(flags.begin(), flags.end());
    std::ostringstream os;
    os << command << '\x1f' << version;
    for (auto& [k, v] : flags) os << '\x1f' << k << '=' << v;
    return os.str();
}

std::filesystem::path ResultCache::file_for(const std::string& key) const {
    return dir_ / (fnv1a_hex(key) + ".cache");
}

std::optional<std::string> ResultCache::lookup(const std::string& key) {
    std::ifstream in(file_for(key), std::ios::binary);
    if (!in) {
        ++misses_;
        return std::nullopt;
    }
    std::ostringstream os;
    os << in.rdbuf();
    ++hits_;
    return os.str();
}

void ResultCache::store(const std::string& key, const std::string& bytes) {
    std::ofstream out(file_for(key), std::ios::binary);
    out << bytes;
}

}  // namespace hb
