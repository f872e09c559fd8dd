#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "twistrace/char_table.hpp"

namespace twistrace {

inline constexpr const char* kCacheEnv = "TWISTRACE_CACHE";
inline constexpr const char* kDefaultCacheDir = ".twistrace-cache";

// An explicit directory wins, then $TWISTRACE_CACHE, then ./.twistrace-cache.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& explicit_dir);

// FNV-1a over the descriptor, seed, tolerance and, for table: descriptors, the
// file contents, rendered as 16 hex digits.
std::string cache_key(const std::string& descriptor, std::uint64_t seed, double tol);

enum class CacheOutcome { kMiss, kHit, kDiscarded };

const char* to_string(CacheOutcome o);

class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path entry(const std::string& descriptor, std::uint64_t seed, double tol) const;

  // Reads and re-verifies an entry; on a miss or a corrupt entry computes the
  // table and writes it with write-then-rename.
  CharacterTable get(const std::string& descriptor, const FiniteGroup& g, std::shared_ptr<const ClassSpace> space,
                     std::uint64_t seed, double tol, CacheOutcome* outcome = nullptr) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace twistrace
