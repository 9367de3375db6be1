#include "kamienny/cache.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace kamienny {

namespace fs = std::filesystem;

fs::path cache_file_path(const fs::path& dir, const PrimePowerLevel& level) {
  std::ostringstream name;
  name << "presentation-p" << level.p << "-n" << level.n << ".json";
  return dir / name.str();
}

std::optional<fs::path> resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return fs::path(flag_value);
  if (const char* env = std::getenv(cache_env_var); env && *env) return fs::path(env);
  return std::nullopt;
}

namespace {

void write_atomic(const fs::path& target, const std::string& content) {
  fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) fail(errc::bad_argument, "cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace

HomologyPresentation load_or_build_presentation(const PrimePowerLevel& level,
                                                const std::optional<fs::path>& dir,
                                                bool* cache_hit) {
  if (cache_hit) *cache_hit = false;
  if (dir) {
    fs::path file = cache_file_path(*dir, level);
    if (fs::exists(file)) {
      std::ifstream in(file, std::ios::binary);
      std::stringstream buf;
      buf << in.rdbuf();
      HomologyPresentation pres = HomologyPresentation::from_cache_string(buf.str());
      if (cache_hit) *cache_hit = true;
      return pres;
    }
  }
  HomologyPresentation pres = HomologyPresentation::build(level);
  if (dir) write_atomic(cache_file_path(*dir, level), pres.to_cache_string());
  return pres;
}

std::vector<CacheEntry> cache_info(const fs::path& dir) {
  std::vector<CacheEntry> entries;
  if (!fs::exists(dir)) return entries;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      nlohmann::json doc = nlohmann::json::parse(buf.str());
      entries.push_back({f.filename().string(), doc.at("p").get<i64>(), doc.at("n").get<int>(),
                         doc.at("rank").get<i64>(), fs::file_size(f)});
    } catch (...) {
      // Not one of ours; skip.
    }
  }
  return entries;
}

}  // namespace kamienny
