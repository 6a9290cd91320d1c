#include "zetalab/cache.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <random>

namespace zetalab {

namespace fs = std::filesystem;

static constexpr char kMagic[4] = {'Z', 'L', 'C', '1'};
static constexpr std::uint32_t kFormat = 1;

std::uint64_t CacheStore::fnv1a64(std::span<const std::uint8_t> bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

static std::uint64_t fnv1a64_str(const std::string& s) {
    return CacheStore::fnv1a64(
        {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()});
}

CacheStore::CacheStore(fs::path root_dir, std::string version_tag)
    : root_(std::move(root_dir)), version_(std::move(version_tag)) {
    fs::create_directories(root_);
}

fs::path CacheStore::resolve_root(const std::string& cli_value) {
    if (!cli_value.empty()) return cli_value;
    if (const char* env = std::getenv("ZETALAB_CACHE_DIR"); env && *env)
        return env;
    return "zetalab-cache";
}

static std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s)
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-')
                   ? c
                   : '_';
    return out;
}

fs::path CacheStore::entry_path(const std::string& kind,
                                const std::string& param_key) const {
    char digest[17];
    std::snprintf(digest, sizeof(digest), "%016llx",
                  static_cast<unsigned long long>(fnv1a64_str(param_key)));
    return root_ / (sanitize(kind) + "-" + digest + "-" + sanitize(version_) + ".zlc");
}

template <typename T>
static bool read_pod(std::ifstream& in, T& v) {
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    return static_cast<bool>(in);
}

std::optional<std::vector<std::uint8_t>> CacheStore::get(
    const std::string& kind, const std::string& param_key) {
    const fs::path path = entry_path(kind, param_key);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ++misses_;
        return std::nullopt;
    }

    auto corrupt = [&](const char* why) -> std::optional<std::vector<std::uint8_t>> {
        warnings_.push_back("cache entry " + path.string() + " rejected: " + why);
        ++misses_;
        return std::nullopt;
    };

    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0) return corrupt("bad magic");

    std::uint32_t format = 0;
    if (!read_pod(in, format) || format != kFormat) return corrupt("format version mismatch");

    std::uint64_t key_len = 0;
    if (!read_pod(in, key_len) || key_len > (1u << 20)) return corrupt("bad key length");
    std::string stored_key(key_len, '\0');
    in.read(stored_key.data(), static_cast<std::streamsize>(key_len));
    if (!in || stored_key != param_key) return corrupt("key mismatch (digest collision)");

    std::uint64_t payload_len = 0, checksum = 0;
    if (!read_pod(in, payload_len) || !read_pod(in, checksum))
        return corrupt("truncated header");

    std::vector<std::uint8_t> payload(payload_len);
    in.read(reinterpret_cast<char*>(payload.data()),
            static_cast<std::streamsize>(payload_len));
    if (!in) return corrupt("truncated payload");
    if (fnv1a64(payload) != checksum) return corrupt("checksum mismatch");

    ++hits_;
    return payload;
}

void CacheStore::put(const std::string& kind, const std::string& param_key,
                     std::span<const std::uint8_t> payload) {
    const fs::path path = entry_path(kind, param_key);

    static std::mt19937_64 rng(std::random_device{}());
    const fs::path tmp =
        path.string() + ".tmp-" + std::to_string(rng() & 0xffffffffull);

    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            warnings_.push_back("cache put failed to open " + tmp.string());
            return;
        }
        out.write(kMagic, 4);
        auto write_pod = [&out](auto v) {
            out.write(reinterpret_cast<const char*>(&v), sizeof(v));
        };
        write_pod(kFormat);
        write_pod(static_cast<std::uint64_t>(param_key.size()));
        out.write(param_key.data(), static_cast<std::streamsize>(param_key.size()));
        write_pod(static_cast<std::uint64_t>(payload.size()));
        write_pod(fnv1a64(payload));
        out.write(reinterpret_cast<const char*>(payload.data()),
                  static_cast<std::streamsize>(payload.size()));
        if (!out) {
            warnings_.push_back("cache put failed writing " + tmp.string());
            return;
        }
    }

    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        warnings_.push_back("cache put rename failed: " + ec.message());
        fs::remove(tmp, ec);
    }
}

}  // namespace zetalab
