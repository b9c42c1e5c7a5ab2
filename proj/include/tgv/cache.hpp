#pragma once

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <thread>

#include <unistd.h>

namespace tgv {

inline constexpr const char* default_cache_dir = ".tgv-cache";
inline constexpr const char* cache_dir_env = "TGV_CACHE_DIR";

/// Writes `text` to `path` through a sibling temp file and a rename, so
/// readers never observe a partial file.
inline void write_atomic(const std::filesystem::path& path, const std::string& text)
{
  static std::atomic<unsigned> counter{0};
  std::filesystem::create_directories(path.parent_path());
  std::ostringstream tmp_name;
  tmp_name << path.filename().string() << ".tmp." << ::getpid() << '.'
           << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.' << counter++;
  const auto tmp = path.parent_path() / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    if (!out.flush())
      throw std::runtime_error("short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename " + tmp.string() + " -> " + path.string() + ": " + ec.message());
  }
}

inline std::optional<std::string> read_file(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Immutable-entry file cache rooted at a directory. Entries are addressed
/// by relative paths such as "classes/sym_5.json".
class CacheStore {
public:
  explicit CacheStore(std::filesystem::path root) : root_(std::move(root))
  {
    std::filesystem::create_directories(root_);
  }

  /// --cache-dir wins, then $TGV_CACHE_DIR, then ./.tgv-cache
  static std::filesystem::path resolve_dir(const std::string& flag_value)
  {
    if (!flag_value.empty())
      return flag_value;
    if (const char* env = std::getenv(cache_dir_env); env && *env)
      return env;
    return default_cache_dir;
  }

  const std::filesystem::path& root() const noexcept { return root_; }

  std::optional<std::string> load(const std::string& key) const { return read_file(root_ / key); }

  void store(const std::string& key, const std::string& text) const { write_atomic(root_ / key, text); }

private:
  std::filesystem::path root_;
};

} // namespace tgv
