// SPDX-License-Identifier: Apache-2.0
//
// Optional flat-file cache for expensive artifacts (class-number tables,
// eta-space basis expansions).  Entries are versioned text files guarded
// by a content hash; anything that fails validation is ignored and the
// value is recomputed.  The cache directory comes from the CLI flag
// --cache-dir or the ETA_HECKE_CACHE environment variable; when neither
// is set the cache is inert.

#ifndef ETAHECKE_CACHE_HPP
#define ETAHECKE_CACHE_HPP

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace etahecke {

class FileCache {
 public:
  FileCache() = default;
  explicit FileCache(std::string dir) : dir_(std::move(dir)) {}

  // Cache honoring ETA_HECKE_CACHE when set (used as the CLI default).
  static FileCache from_environment() {
    const char* env = std::getenv("ETA_HECKE_CACHE");
    return env && *env ? FileCache(env) : FileCache();
  }

  bool enabled() const { return !dir_.empty(); }
  const std::string& dir() const { return dir_; }

  // Stores `payload` under `key`.  Errors (unwritable directory, ...) are
  // swallowed: the cache is an accelerator, never a correctness concern.
  void put(const std::string& key, const std::string& payload) const {
    if (!enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    std::ofstream out(path_for(key), std::ios::trunc);
    if (!out) return;
    out << kMagic << ' ' << fnv1a(payload) << '\n' << payload;
  }

  // Returns the payload stored under `key` if present and intact.
  std::optional<std::string> get(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    std::string magic;
    std::uint64_t hash = 0;
    if (!(in >> magic >> hash) || magic != kMagic) return std::nullopt;
    in.get();  // consume the newline after the header
    std::ostringstream body;
    body << in.rdbuf();
    std::string payload = body.str();
    if (fnv1a(payload) != hash) return std::nullopt;  // corrupted: recompute
    return payload;
  }

  static std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  static constexpr const char* kMagic = "etahecke-cache-v1";

  std::string path_for(const std::string& key) const {
    return (std::filesystem::path(dir_) / (key + ".txt")).string();
  }

  std::string dir_;
};

}  // namespace etahecke

#endif  // ETAHECKE_CACHE_HPP
