#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "excpoly/cli.hpp"

namespace excpoly::cli {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string Cache::key(const json& config) { return sha256_hex(config.dump()); }

std::optional<std::string> Cache::load(const std::string& key) const {
  const fs::path path = fs::path(dir_) / (key + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const json entry = json::parse(buf.str());
    const auto report = entry.at("report").get<std::string>();
    if (entry.at("checksum").get<std::string>() == sha256_hex(report)) return report;
  } catch (const json::exception&) {
  }
  std::cerr << "warning: corrupt cache entry " << path.string() << ", recomputing\n";
  return std::nullopt;
}

void Cache::store(const std::string& key, const std::string& report) const {
  fs::create_directories(dir_);
  const fs::path path = fs::path(dir_) / (key + ".json");
  const fs::path tmp = fs::path(dir_) / (key + ".json.tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << json{{"checksum", sha256_hex(report)}, {"report", report}}.dump() << '\n';
    if (!out) throw Error("cannot write cache entry " + tmp.string());
  }
  fs::rename(tmp, path);
}

}  // namespace excpoly::cli
