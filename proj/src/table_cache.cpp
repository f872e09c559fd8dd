#include "twistrace/table_cache.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "twistrace/report_json.hpp"

namespace twistrace {

namespace fs = std::filesystem;

namespace {

void fnv(std::uint64_t& h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  h ^= 0xff;  // field separator
  h *= 0x100000001b3ULL;
}

std::optional<Json> read_json(const fs::path& p) {
  std::ifstream in(p);
  if (!in) return std::nullopt;
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception&) {
    return Json();  // present but unreadable
  }
}

void write_atomically(const fs::path& target, const std::string& text) {
  static std::atomic<unsigned> counter{0};
  fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary);
    out << text;
    if (!out) throw Error("cannot write cache entry " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace

fs::path resolve_cache_dir(const std::optional<std::string>& explicit_dir) {
  if (explicit_dir && !explicit_dir->empty()) return *explicit_dir;
  if (const char* env = std::getenv(kCacheEnv); env && *env) return env;
  return kDefaultCacheDir;
}

std::string cache_key(const std::string& descriptor, std::uint64_t seed, double tol) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  fnv(h, descriptor);
  fnv(h, std::to_string(seed));
  fnv(h, format_tolerance(tol));
  if (descriptor.rfind("table:", 0) == 0) {
    std::ifstream in(descriptor.substr(6), std::ios::binary);
    std::ostringstream body;
    body << in.rdbuf();
    fnv(h, body.str());
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const char* to_string(CacheOutcome o) {
  switch (o) {
    case CacheOutcome::kMiss: return "miss";
    case CacheOutcome::kHit: return "hit";
    case CacheOutcome::kDiscarded: return "discarded";
  }
  return "?";
}

fs::path TableCache::entry(const std::string& descriptor, std::uint64_t seed, double tol) const {
  return dir_ / (cache_key(descriptor, seed, tol) + ".json");
}

CharacterTable TableCache::get(const std::string& descriptor, const FiniteGroup& g,
                               std::shared_ptr<const ClassSpace> space, std::uint64_t seed, double tol,
                               CacheOutcome* outcome) const {
  const fs::path path = entry(descriptor, seed, tol);
  CacheOutcome result = CacheOutcome::kMiss;
  if (auto doc = read_json(path)) {
    try {
      if (doc->is_null()) throw Error("unparseable");
      if (doc->at("seed").get<std::uint64_t>() != seed || doc->at("tol").get<std::string>() != format_tolerance(tol))
        throw Error("stale key");
      CharacterTable t = table_from_json(*doc, space);
      t.seed = seed;
      t.tol = tol;
      verify_table(t, tol);
      t.residual = table_residuals(t).max();
      if (outcome) *outcome = CacheOutcome::kHit;
      return t;
    } catch (const std::exception&) {
      std::error_code ec;
      fs::remove(path, ec);
      result = CacheOutcome::kDiscarded;
    }
  }
  CharacterTable t = character_table(g, space, seed, tol);
  Json doc = table_json(t);
  doc["seed"] = seed;
  doc["tol"] = format_tolerance(tol);
  try {
    write_atomically(path, dump(doc));
  } catch (const std::exception&) {
    // An unwritable cache only costs recomputation next time.
  }
  if (outcome) *outcome = result;
  return t;
}

}  // namespace twistrace
