#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kamienny/symbols.hpp"

namespace kamienny {

constexpr int cache_format_version = 1;
constexpr const char* cache_env_var = "KAMIENNY_CACHE";

std::filesystem::path cache_file_path(const std::filesystem::path& dir,
                                      const PrimePowerLevel& level);

/// Cache directory from an explicit flag value or the environment, if any.
std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag_value);

/// Build the presentation, consulting the cache when a directory is given.
/// Cache files are written atomically (temp file + rename).
HomologyPresentation load_or_build_presentation(const PrimePowerLevel& level,
                                                const std::optional<std::filesystem::path>& dir,
                                                bool* cache_hit = nullptr);

struct CacheEntry {
  std::string file;
  i64 p = 0;
  int n = 0;
  i64 rank = 0;
  std::uintmax_t bytes = 0;
};
std::vector<CacheEntry> cache_info(const std::filesystem::path& dir);

}  // namespace kamienny
