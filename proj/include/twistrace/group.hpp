#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twistrace/error.hpp"

namespace twistrace {

// Elements of a FiniteGroup are dense indices 0..order-1.
using Element = std::uint32_t;

// Family-specific multiplication, used directly for groups too large to tabulate
// and to fill the table otherwise.
class ElementCodec {
 public:
  virtual ~ElementCodec() = default;
  virtual Element multiply(Element a, Element b) const = 0;
  virtual Element inverse(Element a) const = 0;
};

class FiniteGroup {
 public:
  // Groups up to this order carry a full multiplication table.
  static constexpr std::size_t kTableLimit = 4096;

  FiniteGroup(std::string label, std::size_t order, Element identity,
              std::shared_ptr<const ElementCodec> codec);

  // Builds a group from an explicit row-major table. Validates closure, the
  // identity, inverses and associativity (exhaustive up to order 1000, sampled
  // above); throws DescriptorError on the first violation.
  static FiniteGroup from_table(std::string label, std::size_t order, std::vector<Element> table,
                                std::vector<std::string> element_labels = {});

  std::size_t order() const { return impl_->order; }
  Element identity() const { return impl_->identity; }
  const std::string& label() const { return impl_->label; }
  bool tabulated() const { return !impl_->table.empty(); }
  const std::vector<std::string>& element_labels() const { return impl_->element_labels; }

  Element mul(Element a, Element b) const {
    if (!impl_->table.empty()) return impl_->table[std::size_t{a} * impl_->order + b];
    return impl_->codec->multiply(a, b);
  }
  Element inv(Element a) const { return impl_->inverse[a]; }

  // Order of g as a group element.
  std::size_t element_order(Element g) const;

 private:
  struct Impl {
    std::string label;
    std::size_t order = 0;
    Element identity = 0;
    std::shared_ptr<const ElementCodec> codec;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<std::string> element_labels;
  };
  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

// Associativity (exhaustive when order <= exhaustive_limit, else `samples`
// seeded random triples), two-sided identity, and two-sided inverses.
// Returns a description of the first violation, or nullopt.
std::optional<std::string> check_group_axioms(const FiniteGroup& g,
                                              std::size_t exhaustive_limit = 1000,
                                              std::size_t samples = 200000);

// Conjugacy classes. Classes are ordered by (element order, size descending,
// representative index); class 0 is always the identity. The representative
// of each class is its least element index.
struct ClassData {
  std::vector<std::size_t> class_of;
  std::vector<Element> reps;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> inverse_class;
  std::vector<std::size_t> centralizer_orders;
  std::vector<std::size_t> element_orders;

  std::size_t num_classes() const { return reps.size(); }
};

ClassData conjugacy_classes(const FiniteGroup& g);

// Elements of class j, ascending.
std::vector<Element> class_members(const ClassData& cd, std::size_t j);

enum class AntimorphismAxiom { kBijection, kAntihomomorphism, kInvolution };

const char* to_string(AntimorphismAxiom axiom);

class AntimorphismRejected : public Error {
 public:
  AntimorphismRejected(AntimorphismAxiom axiom, Element g, Element h);
  AntimorphismAxiom axiom() const { return axiom_; }
  // Witness pair for kAntihomomorphism; for the other axioms only g is meaningful.
  Element g() const { return g_; }
  Element h() const { return h_; }

 private:
  AntimorphismAxiom axiom_;
  Element g_;
  Element h_;
};

// A validated involutive antiautomorphism: L(gh) = L(h)L(g) and L(L(g)) = g.
class Antimorphism {
 public:
  const FiniteGroup& source() const { return source_; }
  const std::vector<Element>& map() const { return map_; }
  Element operator()(Element g) const { return map_[g]; }
  std::size_t fixed_point_count() const;
  const std::string& name() const { return name_; }

 private:
  friend Antimorphism check_antimorphism(const FiniteGroup&, std::vector<Element>, std::string);
  friend Antimorphism inversion_antimorphism(const FiniteGroup&);
  Antimorphism(FiniteGroup source, std::vector<Element> map, std::string name)
      : source_(std::move(source)), map_(std::move(map)), name_(std::move(name)) {}

  FiniteGroup source_;
  std::vector<Element> map_;
  std::string name_;
};

// Exhaustive validation. Rejects groups above FiniteGroup::kTableLimit rather
// than sampling. Axioms are checked in the order bijection, antihomomorphism,
// involution; the witness is the first failure in index order.
Antimorphism check_antimorphism(const FiniteGroup& g, std::vector<Element> map,
                                std::string name = "custom");

// g -> g^-1; validated like any other map when the group is small enough,
// accepted by construction above that.
Antimorphism inversion_antimorphism(const FiniteGroup& g);

// Built-in families. Element orders are lexicographic on the underlying
// representation.
FiniteGroup cyclic_group(std::size_t n);
// Order 2n; element f*n + k is r^k s^f.
FiniteGroup dihedral_group(std::size_t n);
// Permutations of {0..n-1} in lexicographic order, (gh)(x) = g(h(x)).
FiniteGroup symmetric_group(std::size_t n);

// The permutation behind element index `rank` of symmetric_group(n).
std::vector<std::uint8_t> permutation_of(std::size_t n, std::size_t rank);
std::size_t rank_of(std::span<const std::uint8_t> perm);

}  // namespace twistrace
