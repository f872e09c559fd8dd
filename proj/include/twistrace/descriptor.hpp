#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "twistrace/group.hpp"
#include "twistrace/pgl2.hpp"

namespace twistrace {

// Group descriptors:
//   cyclic:<n> | dihedral:<n> (order 2n) | sym:<n> (order n!) | pgl2:<q> (q an odd
//   prime power) | table:<path> (JSON {"order": n, "mul": n x n, "labels": [...]})
// Identical descriptors always produce identical element orderings.
struct BuiltGroup {
  FiniteGroup group;
  std::optional<Pgl2> pgl2;  // set for pgl2:<q>
};

BuiltGroup build_group_ex(std::string_view descriptor, std::size_t cap = kDefaultOrderCap);

inline FiniteGroup build_group(std::string_view descriptor, std::size_t cap = kDefaultOrderCap) {
  return build_group_ex(descriptor, cap).group;
}

// Reads {"map": [L(0), L(1), ...]} and validates it against g.
Antimorphism load_antimorphism(const FiniteGroup& g, const std::string& path);

}  // namespace twistrace
