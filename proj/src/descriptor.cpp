#include "twistrace/descriptor.hpp"

#include <charconv>
#include <fstream>
#include <json.hpp>

namespace twistrace {

namespace {

std::size_t parse_count(std::string_view descriptor, std::string_view text) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw DescriptorError("malformed group descriptor '" + std::string(descriptor) + "'");
  return value;
}

void require_within(std::string_view descriptor, std::size_t order, std::size_t cap) {
  if (order > cap)
    throw CapExceeded(std::string(descriptor) + " has order " + std::to_string(order) + " above cap " +
                      std::to_string(cap));
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DescriptorError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DescriptorError(path + ": " + e.what());
  }
}

FiniteGroup group_from_file(const std::string& path, std::size_t cap) {
  const nlohmann::json doc = read_json(path);
  try {
    const auto order = doc.at("order").get<std::size_t>();
    require_within("table:" + path, order, cap);
    // Either n rows of n entries or one flat row-major list of n^2 entries.
    const auto& rows = doc.at("mul");
    std::vector<Element> table;
    table.reserve(order * order);
    if (rows.is_array() && rows.size() == order * order && (order == 0 || !rows[0].is_array())) {
      for (const auto& v : rows) table.push_back(v.get<Element>());
    } else {
      if (!rows.is_array() || rows.size() != order)
        throw DescriptorError(path + ": \"mul\" must have one row per element");
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != order)
          throw DescriptorError(path + ": every row of \"mul\" must have order entries");
        for (const auto& v : row) table.push_back(v.get<Element>());
      }
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
    return FiniteGroup::from_table("table:" + path, order, std::move(table), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw DescriptorError(path + ": " + e.what());
  }
}

}  // namespace

BuiltGroup build_group_ex(std::string_view descriptor, std::size_t cap) {
  const auto colon = descriptor.find(':');
  if (colon == std::string_view::npos)
    throw DescriptorError("malformed group descriptor '" + std::string(descriptor) + "'");
  const std::string_view family = descriptor.substr(0, colon);
  const std::string_view arg = descriptor.substr(colon + 1);

  if (family == "table") {
    if (arg.empty()) throw DescriptorError("table:<path> needs a path");
    return {group_from_file(std::string(arg), cap), std::nullopt};
  }
  const std::size_t n = parse_count(descriptor, arg);
  if (family == "cyclic") {
    require_within(descriptor, n, cap);
    return {cyclic_group(n), std::nullopt};
  }
  if (family == "dihedral") {
    require_within(descriptor, 2 * n, cap);
    return {dihedral_group(n), std::nullopt};
  }
  if (family == "sym") {
    std::size_t order = 1;
    for (std::size_t i = 2; i <= n; ++i) {
      order *= i;
      require_within(descriptor, order, cap);
    }
    return {symmetric_group(n), std::nullopt};
  }
  if (family == "pgl2") {
    if (n > 1u << 16) throw CapExceeded(std::string(descriptor) + ": field too large");
    const std::uint32_t q = static_cast<std::uint32_t>(n);
    if (q >= 2) require_within(descriptor, std::size_t{q} * q * q - q, cap);
    Pgl2 g = build_pgl2(FiniteField::build(q, std::max<std::uint32_t>(q, FiniteField::kDefaultCap)), cap);
    FiniteGroup group = g.group();
    return {std::move(group), std::move(g)};
  }
  throw DescriptorError("unsupported group family '" + std::string(family) + "'");
}

Antimorphism load_antimorphism(const FiniteGroup& g, const std::string& path) {
  const nlohmann::json doc = read_json(path);
  std::vector<Element> map;
  try {
    map = doc.at("map").get<std::vector<Element>>();
  } catch (const nlohmann::json::exception& e) {
    throw DescriptorError(path + ": " + e.what());
  }
  return check_antimorphism(g, std::move(map), "table:" + path);
}

}  // namespace twistrace
