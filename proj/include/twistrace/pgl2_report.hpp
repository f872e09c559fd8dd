#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistrace/pgl2.hpp"

namespace twistrace {

using ClassPair = std::pair<std::size_t, std::size_t>;

struct Pgl2Report {
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // c_0..c_d of the field modulus
  std::size_t order = 0;
  std::vector<std::size_t> class_order;  // report order of class indices
  std::vector<Pgl2ClassKind> kinds;      // by class index

  ClassFunction st;
  ClassFunction sgn;
  ClassFunction ind_t;
  ClassFunction gelfand;
  std::vector<Element> torus;

  ApIdentityReport ap;
  // gelfand = sum_i (a_i + b_i sgn) St^i, and the same search without sgn.
  StPolynomialSolutions solutions;
  StPolynomialSolutions st_only;

  // (a_2, b_2, a_1, b_1, a_0, b_0) = (1, 0, 1, 0, 0, 1) padded to max_degree;
  // empty when max_degree < 2.
  IntVector stated_tuple;
  bool stated_tuple_in_set = false;
  std::vector<long long> stated_values;  // St^2 + St + sgn
  IntVector computed_tuple;              // St^2 + sgn
  bool computed_tuple_in_set = false;

  std::optional<ClassPair> corollary_witness;  // equal St, different sgn
  std::vector<ClassPair> sgn_witnesses;
  std::vector<ClassPair> gelfand_witnesses;  // equal St, different chi_G

  // Every check whose failure means the mathematics disagrees rather than the
  // code: the ap identity, a nonempty solution set containing St^2 + St + sgn,
  // and a corollary witness.
  bool identities_hold() const {
    return ap.holds() && !solutions.set.empty() && stated_tuple_in_set && corollary_witness.has_value();
  }
};

// Coefficient vector for sum_i (a_i + b_i sgn) St^i from {degree: (a, b)}.
IntVector st_polynomial_tuple(std::size_t max_degree, const std::vector<std::pair<std::size_t, std::pair<int, int>>>& terms);

// Integer values of sum_i (a_i + b_i sgn) St^i.
std::vector<long long> evaluate_st_polynomial(const IntVector& tuple, const ClassFunction& st, const ClassFunction& sgn);

// Throws NumericalError when a structural invariant fails (St(e) = q, <St, St> = 1,
// <St, 1> = 0, sgn^2 = 1, sgn nontrivial on the torus, Ind(e) = q^2 - q).
Pgl2Report analyze_pgl2(const Pgl2& g, const CharacterTable& t, std::size_t max_degree);

}  // namespace twistrace
