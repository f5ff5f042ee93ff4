#include "dihedralsig/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include <openssl/evp.h>

#include "dihedralsig/errors.hpp"

namespace dihedralsig {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 computation failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

std::string ResultCache::key(const std::string& op, const nlohmann::json& input) {
  return sha256_hex(nlohmann::json{{"op", op}, {"input", input}}.dump());
}

std::optional<nlohmann::json> ResultCache::get(const std::string& op, const nlohmann::json& input) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(dir_ / (key(op, input) + ".json"));
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(in);
    if (j.value("op", "") != op || j.at("input") != input) return std::nullopt;
    ++hits_;
    return j.at("value");
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void ResultCache::put(const std::string& op, const nlohmann::json& input, const nlohmann::json& value) const {
  if (!enabled()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  const auto name = key(op, input);
  const auto tmp = dir_ / (name + ".tmp" + std::to_string(std::random_device{}()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << nlohmann::json{{"op", op}, {"input", input}, {"value", value}}.dump();
    if (!out) return;
  }
  std::filesystem::rename(tmp, dir_ / (name + ".json"), ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (const char* env = std::getenv("DIHEDRALSIG_CACHE"); env && *env) return env;
  if (flag) return *flag;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "dihedralsig";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "dihedralsig";
  return std::filesystem::temp_directory_path() / "dihedralsig-cache";
}

}  // namespace dihedralsig
