#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace galtrunc {

std::string_view library_version();

/// Hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

/// Persistent JSON result store. One file per entry under
/// dir/<first two hex digits>/<key>.json. Thread-safe.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir, bool enabled = true);

  /// $GALTRUNC_CACHE_DIR, else $XDG_CACHE_HOME/galtrunc, else
  /// $HOME/.cache/galtrunc, else ./.galtrunc-cache.
  static std::filesystem::path default_dir();

  /// Hash of the library version, the operation name and the compact dump of
  /// the canonical input.
  static std::string make_key(std::string_view operation, const nlohmann::json& input);

  bool enabled() const { return enabled_; }
  const std::filesystem::path& dir() const { return dir_; }

  /// nullopt on miss. A corrupt entry counts as a miss and adds a warning.
  std::optional<nlohmann::json> get(const std::string& key);
  void put(const std::string& key, std::string_view operation, const nlohmann::json& value);

  nlohmann::json get_or_compute(std::string_view operation, const nlohmann::json& input,
                                const std::function<nlohmann::json()>& compute);

  std::uint64_t hits() const;
  std::uint64_t misses() const;
  std::vector<std::string> warnings() const;

 private:
  std::filesystem::path path_for(const std::string& key) const;

  std::filesystem::path dir_;
  bool enabled_;
  mutable std::mutex mutex_;
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
  std::vector<std::string> warnings_;
};

}  // namespace galtrunc
