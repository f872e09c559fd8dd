#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "twistrace/char_table.hpp"
#include "twistrace/finite_field.hpp"
#include "twistrace/group.hpp"
#include "twistrace/integer_solver.hpp"

namespace twistrace {

// A 2x2 matrix [[a, b], [c, d]] over F_q acting on column vectors. Canonical
// form: the first nonzero entry in the order a, b, c, d equals 1.
struct ProjMatrix {
  FieldElement a, b, c, d;
  friend bool operator==(const ProjMatrix&, const ProjMatrix&) = default;
  friend auto operator<=>(const ProjMatrix&, const ProjMatrix&) = default;
};

// Conjugacy type read off the number of fixed points on the projective line.
enum class Pgl2ClassKind { kIdentity, kUnipotent, kHyperbolic, kElliptic };

const char* to_string(Pgl2ClassKind kind);

class Pgl2 {
 public:
  struct Data {
    FiniteField field;
    std::vector<ProjMatrix> elements;  // canonical forms in lexicographic order
  };

  const FiniteField& field() const { return data_->field; }
  const FiniteGroup& group() const { return group_; }
  std::uint32_t q() const { return data_->field.q(); }
  const ProjMatrix& matrix(Element g) const { return data_->elements[g]; }
  const std::vector<ProjMatrix>& elements() const { return data_->elements; }

  ProjMatrix canonical(const ProjMatrix& m) const;
  // Index of the element represented by m (any scalar multiple). Throws for
  // singular matrices.
  Element index_of(const ProjMatrix& m) const;
  ProjMatrix product(const ProjMatrix& x, const ProjMatrix& y) const;
  FieldElement determinant(Element g) const;

  // Points [x : y] of P^1(F_q) with g [x : y] = [x : y].
  std::size_t fixed_points(Element g) const;

  friend Pgl2 build_pgl2(const FiniteField& field, std::size_t cap);

 private:
  Pgl2(std::shared_ptr<const Data> data, FiniteGroup group)
      : data_(std::move(data)), group_(std::move(group)) {}

  std::shared_ptr<const Data> data_;
  FiniteGroup group_;
};

inline constexpr std::size_t kDefaultOrderCap = 10000;

// PGL(2, q), order q^3 - q. Throws CapExceeded when the order exceeds cap.
Pgl2 build_pgl2(const FiniteField& field, std::size_t cap = kDefaultOrderCap);

std::vector<Pgl2ClassKind> class_kinds(const Pgl2& g, const ClassData& cd);

// Class indices in report order: identity, unipotent, hyperbolic classes by
// representative index, elliptic classes by representative index.
std::vector<std::size_t> report_class_order(const Pgl2& g, const ClassData& cd);

// St(g) = (fixed points on the projective line) - 1.
ClassFunction steinberg_character(const Pgl2& g, std::shared_ptr<const ClassSpace> space);
// +1 when the determinant of a representative is a square, else -1.
ClassFunction sign_character(const Pgl2& g, std::shared_ptr<const ClassSpace> space);

// The image of F_{q^2}^x acting on F_{q^2} = F_q + F_q w, w^2 = non-square:
// matrices [[u, nu v], [v, u]]. Sorted element indices, cyclic of order q + 1,
// acting freely on the projective line. Throws Error if any of that fails.
std::vector<Element> coxeter_torus(const Pgl2& g);

Antimorphism transpose_antimorphism(const Pgl2& g);

struct ApIdentityReport {
  std::vector<long long> st_squared;
  std::vector<long long> induced;
  std::vector<long long> steinberg;
  std::vector<long long> residual;  // St^2 - Ind_T 1 - St
  std::optional<std::size_t> witness_class;  // first class with nonzero residual

  bool holds() const { return !witness_class.has_value(); }
};

ApIdentityReport verify_ap_identity(const ClassFunction& st, const ClassFunction& induced_torus);

// Unknowns ordered (a_D, b_D, ..., a_1, b_1, a_0, b_0) for
// target = sum_i (a_i + b_i sgn) St^i.
struct StPolynomialSolutions {
  std::size_t max_degree = 0;
  IntegerSolutionSet set;
  IntMatrix system;   // one row per class
  IntVector target;

  bool contains(const IntVector& coefficients) const;
};

StPolynomialSolutions solve_polynomial_in_st(const ClassFunction& st, const ClassFunction& sgn,
                                             const ClassFunction& target, std::size_t max_degree);

// Same search restricted to Z[St] (all b_i = 0).
StPolynomialSolutions solve_polynomial_in_st_only(const ClassFunction& st, const ClassFunction& target,
                                                  std::size_t max_degree);

// A pair of classes (i < j) with f(i) = f(j) and h(i) != h(j), first in index
// order; certifies that h is not a polynomial in f.
std::optional<std::pair<std::size_t, std::size_t>> separation_witness(const ClassFunction& f,
                                                                       const ClassFunction& h);
std::vector<std::pair<std::size_t, std::size_t>> all_separation_witnesses(const ClassFunction& f,
                                                                           const ClassFunction& h);

inline std::optional<std::pair<std::size_t, std::size_t>> corollary_witness(const ClassFunction& st,
                                                                            const ClassFunction& sgn) {
  return separation_witness(st, sgn);
}

}  // namespace twistrace
