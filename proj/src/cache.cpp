#include "galtrunc/cache.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "galtrunc/error.hpp"

#ifndef GALTRUNC_VERSION
#define GALTRUNC_VERSION "0.0.0"
#endif

namespace galtrunc {

using nlohmann::json;
namespace fs = std::filesystem;

std::string_view library_version() { return GALTRUNC_VERSION; }

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  require(EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) == 1, "SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

ResultCache::ResultCache(fs::path dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled) {}

fs::path ResultCache::default_dir() {
  if (const char* d = std::getenv("GALTRUNC_CACHE_DIR"); d && *d) return d;
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return fs::path(d) / "galtrunc";
  if (const char* d = std::getenv("HOME"); d && *d) return fs::path(d) / ".cache" / "galtrunc";
  return ".galtrunc-cache";
}

std::string ResultCache::make_key(std::string_view operation, const json& input) {
  std::string text = "galtrunc/";
  text += library_version();
  text += '\n';
  text += operation;
  text += '\n';
  text += input.dump();
  return sha256_hex(text);
}

fs::path ResultCache::path_for(const std::string& key) const { return dir_ / key.substr(0, 2) / (key + ".json"); }

std::optional<json> ResultCache::get(const std::string& key) {
  if (!enabled_) return std::nullopt;
  const fs::path path = path_for(key);
  std::lock_guard lock(mutex_);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  json entry = json::parse(buf.str(), nullptr, false);
  if (entry.is_discarded() || !entry.is_object() || entry.value("key", "") != key || !entry.contains("value") ||
      entry.value("version", "") != library_version()) {
    warnings_.push_back("corrupt cache entry " + path.string() + "; recomputing");
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return entry["value"];
}

void ResultCache::put(const std::string& key, std::string_view operation, const json& value) {
  if (!enabled_) return;
  const fs::path path = path_for(key);
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  json entry{{"key", key},
             {"operation", operation},
             {"version", library_version()},
             {"timestamp", std::chrono::duration_cast<std::chrono::seconds>(now).count()},
             {"value", value}};
  std::lock_guard lock(mutex_);
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) {
    warnings_.push_back("cannot create cache directory " + path.parent_path().string() + ": " + ec.message());
    return;
  }
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << entry.dump();
    if (!out) {
      warnings_.push_back("cannot write cache entry " + tmp.string());
      return;
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) warnings_.push_back("cannot store cache entry " + path.string() + ": " + ec.message());
}

json ResultCache::get_or_compute(std::string_view operation, const json& input, const std::function<json()>& compute) {
  const std::string key = make_key(operation, input);
  if (auto hit = get(key)) return *hit;
  json value = compute();
  put(key, operation, value);
  return value;
}

std::uint64_t ResultCache::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

std::uint64_t ResultCache::misses() const {
  std::lock_guard lock(mutex_);
  return misses_;
}

std::vector<std::string> ResultCache::warnings() const {
  std::lock_guard lock(mutex_);
  return warnings_;
}

}  // namespace galtrunc
