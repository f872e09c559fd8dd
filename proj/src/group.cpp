#include "twistrace/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace twistrace {

namespace {

std::vector<Element> tabulate(std::size_t n, const ElementCodec& codec) {
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = codec.multiply(static_cast<Element>(a), static_cast<Element>(b));
  return table;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string label, std::size_t order, Element identity,
                         std::shared_ptr<const ElementCodec> codec) {
  if (order == 0) throw DescriptorError("group order must be positive");
  auto impl = std::make_shared<Impl>();
  impl->label = std::move(label);
  impl->order = order;
  impl->identity = identity;
  impl->inverse.resize(order);
  for (std::size_t a = 0; a < order; ++a) impl->inverse[a] = codec->inverse(static_cast<Element>(a));
  if (order <= kTableLimit) impl->table = tabulate(order, *codec);
  impl->codec = std::move(codec);
  impl_ = std::move(impl);
}

FiniteGroup FiniteGroup::from_table(std::string label, std::size_t order, std::vector<Element> table,
                                    std::vector<std::string> element_labels) {
  if (order == 0) throw DescriptorError(label + ": order must be positive");
  if (table.size() != order * order)
    throw DescriptorError(label + ": multiplication table must have order^2 entries");
  for (Element e : table)
    if (e >= order) throw DescriptorError(label + ": table entry out of range");
  if (!element_labels.empty() && element_labels.size() != order)
    throw DescriptorError(label + ": labels must have one entry per element");

  auto at = [&](std::size_t a, std::size_t b) { return table[a * order + b]; };

  std::optional<Element> identity;
  for (std::size_t e = 0; e < order && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < order && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) identity = static_cast<Element>(e);
  }
  if (!identity) throw DescriptorError(label + ": no two-sided identity");

  auto impl = std::make_shared<Impl>();
  impl->label = std::move(label);
  impl->order = order;
  impl->identity = *identity;
  impl->inverse.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    std::optional<Element> found;
    for (std::size_t b = 0; b < order; ++b) {
      if (at(a, b) == *identity && at(b, a) == *identity) {
        found = static_cast<Element>(b);
        break;
      }
    }
    if (!found)
      throw DescriptorError(impl->label + ": element " + std::to_string(a) + " has no inverse");
    impl->inverse[a] = *found;
  }
  impl->table = std::move(table);
  impl->element_labels = std::move(element_labels);
  FiniteGroup g(std::move(impl));
  if (auto bad = check_group_axioms(g)) throw DescriptorError(g.label() + ": " + *bad);
  return g;
}

std::size_t FiniteGroup::element_order(Element g) const {
  std::size_t k = 1;
  Element x = g;
  while (x != identity()) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

std::optional<std::string> check_group_axioms(const FiniteGroup& g, std::size_t exhaustive_limit,
                                              std::size_t samples) {
  const std::size_t n = g.order();
  const Element e = g.identity();
  for (std::size_t a = 0; a < n; ++a) {
    const auto x = static_cast<Element>(a);
    if (g.mul(e, x) != x || g.mul(x, e) != x) return "identity is not two-sided at " + std::to_string(a);
    if (g.mul(x, g.inv(x)) != e || g.mul(g.inv(x), x) != e)
      return "bad inverse for " + std::to_string(a);
    if (g.inv(g.inv(x)) != x) return "inverse is not an involution at " + std::to_string(a);
  }
  auto assoc = [&](Element a, Element b, Element c) -> std::optional<std::string> {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
      std::ostringstream os;
      os << "associativity fails at (" << a << ", " << b << ", " << c << ")";
      return os.str();
    }
    return std::nullopt;
  };
  if (n <= exhaustive_limit) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        const Element ab = g.mul(a, b);
        for (Element c = 0; c < n; ++c)
          if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) return assoc(a, b, c);
      }
    return std::nullopt;
  }
  std::mt19937_64 rng(0x5eed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto a = static_cast<Element>(rng() % n);
    const auto b = static_cast<Element>(rng() % n);
    const auto c = static_cast<Element>(rng() % n);
    if (auto bad = assoc(a, b, c)) return bad;
  }
  return std::nullopt;
}

ClassData conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw_class(n, kUnset);
  std::vector<Element> raw_reps;
  std::vector<std::size_t> raw_sizes;
  for (std::size_t a = 0; a < n; ++a) {
    if (raw_class[a] != kUnset) continue;
    const std::size_t id = raw_reps.size();
    raw_reps.push_back(static_cast<Element>(a));
    std::size_t size = 0;
    for (std::size_t x = 0; x < n; ++x) {
      const auto xe = static_cast<Element>(x);
      const Element c = g.mul(g.mul(xe, static_cast<Element>(a)), g.inv(xe));
      if (raw_class[c] == kUnset) {
        raw_class[c] = id;
        ++size;
      }
    }
    raw_sizes.push_back(size);
  }

  const std::size_t r = raw_reps.size();
  std::vector<std::size_t> raw_orders(r);
  for (std::size_t j = 0; j < r; ++j) raw_orders[j] = g.element_order(raw_reps[j]);

  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t i, std::size_t j) {
    if (raw_orders[i] != raw_orders[j]) return raw_orders[i] < raw_orders[j];
    if (raw_sizes[i] != raw_sizes[j]) return raw_sizes[i] > raw_sizes[j];
    return raw_reps[i] < raw_reps[j];
  });
  std::vector<std::size_t> new_index(r);
  for (std::size_t j = 0; j < r; ++j) new_index[perm[j]] = j;

  ClassData cd;
  cd.class_of.resize(n);
  for (std::size_t a = 0; a < n; ++a) cd.class_of[a] = new_index[raw_class[a]];
  cd.reps.resize(r);
  cd.sizes.resize(r);
  cd.element_orders.resize(r);
  cd.centralizer_orders.resize(r);
  cd.inverse_class.resize(r);
  for (std::size_t j = 0; j < r; ++j) {
    const std::size_t old = perm[j];
    cd.reps[j] = raw_reps[old];
    cd.sizes[j] = raw_sizes[old];
    cd.element_orders[j] = raw_orders[old];
    cd.centralizer_orders[j] = n / raw_sizes[old];
  }
  for (std::size_t j = 0; j < r; ++j) cd.inverse_class[j] = cd.class_of[g.inv(cd.reps[j])];
  return cd;
}

std::vector<Element> class_members(const ClassData& cd, std::size_t j) {
  std::vector<Element> out;
  out.reserve(cd.sizes.at(j));
  for (std::size_t a = 0; a < cd.class_of.size(); ++a)
    if (cd.class_of[a] == j) out.push_back(static_cast<Element>(a));
  return out;
}

// ---------------------------------------------------------------------------
// Antimorphisms

const char* to_string(AntimorphismAxiom axiom) {
  switch (axiom) {
    case AntimorphismAxiom::kBijection: return "not-bijective";
    case AntimorphismAxiom::kAntihomomorphism: return "not-anti";
    case AntimorphismAxiom::kInvolution: return "not-involutive";
  }
  return "unknown";
}

namespace {

std::string rejection_message(AntimorphismAxiom axiom, Element g, Element h) {
  std::ostringstream os;
  os << "antimorphism rejected (" << to_string(axiom) << "): ";
  switch (axiom) {
    case AntimorphismAxiom::kBijection: os << "element " << g << " is hit twice or out of range"; break;
    case AntimorphismAxiom::kAntihomomorphism:
      os << "L(gh) != L(h)L(g) for g=" << g << ", h=" << h;
      break;
    case AntimorphismAxiom::kInvolution: os << "L(L(g)) != g for g=" << g; break;
  }
  return os.str();
}

}  // namespace

AntimorphismRejected::AntimorphismRejected(AntimorphismAxiom axiom, Element g, Element h)
    : Error(rejection_message(axiom, g, h)), axiom_(axiom), g_(g), h_(h) {}

std::size_t Antimorphism::fixed_point_count() const {
  std::size_t count = 0;
  for (std::size_t g = 0; g < map_.size(); ++g) count += map_[g] == g;
  return count;
}

Antimorphism check_antimorphism(const FiniteGroup& g, std::vector<Element> map, std::string name) {
  const std::size_t n = g.order();
  if (n > FiniteGroup::kTableLimit)
    throw CapExceeded("antimorphism validation is exhaustive and limited to order " +
                      std::to_string(FiniteGroup::kTableLimit));
  if (map.size() != n) throw AntimorphismRejected(AntimorphismAxiom::kBijection, 0, 0);
  std::vector<bool> hit(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (map[a] >= n || hit[map[a]])
      throw AntimorphismRejected(AntimorphismAxiom::kBijection, static_cast<Element>(a), 0);
    hit[map[a]] = true;
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (map[g.mul(a, b)] != g.mul(map[b], map[a]))
        throw AntimorphismRejected(AntimorphismAxiom::kAntihomomorphism, a, b);
  for (Element a = 0; a < n; ++a)
    if (map[map[a]] != a) throw AntimorphismRejected(AntimorphismAxiom::kInvolution, a, a);
  return Antimorphism(g, std::move(map), std::move(name));
}

Antimorphism inversion_antimorphism(const FiniteGroup& g) {
  std::vector<Element> map(g.order());
  for (std::size_t a = 0; a < map.size(); ++a) map[a] = g.inv(static_cast<Element>(a));
  if (g.order() > FiniteGroup::kTableLimit) return Antimorphism(g, std::move(map), "inversion");
  return check_antimorphism(g, std::move(map), "inversion");
}

}  // namespace twistrace
