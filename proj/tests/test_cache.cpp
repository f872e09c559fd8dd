#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "twistrace/descriptor.hpp"
#include "twistrace/report_json.hpp"
#include "twistrace/table_cache.hpp"

using namespace twistrace;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("twistrace_cache_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("keys separate descriptor, seed and tolerance") {
  const std::string k = cache_key("sym:4", 0, 1e-8);
  CHECK(k.size() == 16);
  CHECK(k == cache_key("sym:4", 0, 1e-8));
  CHECK(k != cache_key("sym:5", 0, 1e-8));
  CHECK(k != cache_key("sym:4", 1, 1e-8));
  CHECK(k != cache_key("sym:4", 0, 1e-9));
}

TEST_CASE("directory precedence") {
  ::unsetenv(kCacheEnv);
  CHECK(resolve_cache_dir(std::nullopt) == fs::path(kDefaultCacheDir));
  ::setenv(kCacheEnv, "/tmp/from_env", 1);
  CHECK(resolve_cache_dir(std::nullopt) == fs::path("/tmp/from_env"));
  CHECK(resolve_cache_dir(std::string("/tmp/explicit")) == fs::path("/tmp/explicit"));
  ::unsetenv(kCacheEnv);
}

TEST_CASE("miss, hit, and recovery from corrupt entries") {
  const TableCache cache(fresh_dir("cycle"));
  const FiniteGroup g = build_group("pgl2:5");
  const auto space = make_class_space(g);
  CacheOutcome o;
  const CharacterTable first = cache.get("pgl2:5", g, space, 0, 1e-8, &o);
  CHECK(o == CacheOutcome::kMiss);
  const fs::path entry = cache.entry("pgl2:5", 0, 1e-8);
  REQUIRE(fs::exists(entry));
  const std::string written = slurp(entry);

  const CharacterTable second = cache.get("pgl2:5", g, space, 0, 1e-8, &o);
  CHECK(o == CacheOutcome::kHit);
  CHECK(dump(table_json(first)) == dump(table_json(second)));

  // Truncated file.
  std::ofstream(entry) << written.substr(0, written.size() / 2);
  cache.get("pgl2:5", g, space, 0, 1e-8, &o);
  CHECK(o == CacheOutcome::kDiscarded);
  CHECK(slurp(entry) == written);

  // Well-formed JSON with a wrong value: fails orthogonality on re-verification.
  Json doc = Json::parse(written);
  doc["rows"][2][1]["re"] = doc["rows"][2][1]["re"].get<double>() + 0.25;
  std::ofstream(entry) << doc.dump();
  cache.get("pgl2:5", g, space, 0, 1e-8, &o);
  CHECK(o == CacheOutcome::kDiscarded);
  CHECK(slurp(entry) == written);
  CHECK(cache.get("pgl2:5", g, space, 0, 1e-8, &o).size() == 7);
  CHECK(o == CacheOutcome::kHit);
}

TEST_CASE("table JSON round trip") {
  const FiniteGroup g = build_group("cyclic:5");
  const CharacterTable t = character_table(g);
  const Json j = table_json(t);
  CHECK(j.at("group") == "cyclic:5");
  CHECK(j.at("rows").size() == 5);
  const CharacterTable back = table_from_json(Json::parse(j.dump()), t.space);
  for (std::size_t k = 0; k < 5; ++k) CHECK(max_distance(back.rows[k], t.rows[k]) == 0.0);
  const auto other = make_class_space(build_group("sym:3"));
  CHECK_THROWS_AS(table_from_json(j, other), Error);
}
