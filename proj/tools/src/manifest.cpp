#include "fekete_cli/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fekete/parallel.hpp"

#ifndef FEKETE_VERSION
#define FEKETE_VERSION "0.0.0"
#endif

namespace fekete::cli {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string_view tool_version() { return FEKETE_VERSION; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void RunManifest::add_input(const std::string& path) {
  const std::string bytes = read_file(path);
  inputs.push_back({path, bytes.size(), fnv1a64(bytes)});
}

void RunManifest::finish() {
  finished_at = utc_timestamp();
  threads = thread_count();
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["arguments"] = arguments;
  j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  j["version"] = version;
  j["started_at"] = started_at;
  j["finished_at"] = finished_at;
  j["threads"] = threads;
  j["inputs"] = nlohmann::json::array();
  for (const auto& in : inputs) {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(in.fnv1a));
    j["inputs"].push_back({{"path", in.path}, {"bytes", in.bytes}, {"fnv1a64", hex}});
  }
  return j;
}

}  // namespace fekete::cli
