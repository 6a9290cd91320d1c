#pragma once

// Content-addressed on-disk cache for expensive artifacts.
//
// One file per entry under root_dir, named <kind>-<digest>-<version_tag>.zlc.
// Layout: magic "ZLC1", u32 format version, u64 key length, key bytes,
// u64 payload length, u64 FNV-1a checksum of the payload, payload bytes.
// Writers write to a temporary name and atomically rename; entries are
// immutable once written. A checksum or key mismatch on read is treated as
// a miss and recorded as a warning.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zetalab {

class CacheStore {
  public:
    CacheStore(std::filesystem::path root_dir, std::string version_tag);

    // Resolution order for the root: explicit argument, ZETALAB_CACHE_DIR
    // environment variable, "./zetalab-cache".
    static std::filesystem::path resolve_root(const std::string& cli_value);

    std::optional<std::vector<std::uint8_t>> get(const std::string& kind,
                                                 const std::string& param_key);
    void put(const std::string& kind, const std::string& param_key,
             std::span<const std::uint8_t> payload);

    const std::filesystem::path& root() const { return root_; }
    const std::string& version_tag() const { return version_; }

    int hits() const { return hits_; }
    int misses() const { return misses_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    static std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes);

  private:
    std::filesystem::path entry_path(const std::string& kind,
                                     const std::string& param_key) const;

    std::filesystem::path root_;
    std::string version_;
    int hits_ = 0;
    int misses_ = 0;
    std::vector<std::string> warnings_;
};

}  // namespace zetalab
