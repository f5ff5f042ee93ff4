#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace dihedralsig {

std::string sha256_hex(const std::string& data);

/// Content-addressed store of JSON results, one file per key.
class ResultCache {
 public:
  ResultCache() = default;
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& directory() const { return dir_; }

  /// SHA-256 of the canonical dump of {op, input}.
  static std::string key(const std::string& op, const nlohmann::json& input);

  std::optional<nlohmann::json> get(const std::string& op, const nlohmann::json& input) const;
  void put(const std::string& op, const nlohmann::json& input, const nlohmann::json& value) const;

  std::size_t hits() const { return hits_; }

 private:
  std::filesystem::path dir_;
  mutable std::size_t hits_ = 0;
};

/// DIHEDRALSIG_CACHE, then the flag, then ~/.cache/dihedralsig.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

}  // namespace dihedralsig
