#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace fekete::cli {

// 64-bit FNV-1a over raw bytes.
std::uint64_t fnv1a64(std::string_view bytes);

// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

std::string_view tool_version();

struct InputDigest {
  std::string path;
  std::uintmax_t bytes = 0;
  std::uint64_t fnv1a = 0;
};

// Provenance block embedded in every report the tool emits.
struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  std::optional<std::uint64_t> seed;
  std::string version{tool_version()};
  std::string started_at = utc_timestamp();
  std::string finished_at;
  std::size_t threads = 0;
  std::vector<InputDigest> inputs;

  // Hashes the file contents; throws std::runtime_error if it cannot be read.
  void add_input(const std::string& path);
  void finish();

  nlohmann::json to_json() const;
};

// Contents of a file as a string; throws std::runtime_error naming the path.
std::string read_file(const std::string& path);

}  // namespace fekete::cli
