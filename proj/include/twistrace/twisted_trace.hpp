#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twistrace/char_table.hpp"

namespace twistrace {

// N_L(g) = #{h : h g = L(h)}, the trace of rho_g composed with f -> f o L.
struct CountingFunction {
  std::vector<long long> per_element;
  // Value at each class representative.
  ClassFunction by_class;
  // Two conjugate elements with different counts, if any.
  std::optional<std::pair<Element, Element>> noncentral_witness;
  long long total = 0;

  bool central() const { return !noncentral_witness.has_value(); }
};

CountingFunction counting_function(const Antimorphism& l, std::shared_ptr<const ClassSpace> space);

struct SymmetryResult {
  bool holds = true;
  std::optional<std::size_t> witness_class;
};

// N(C) == N(C^-1) for every class, compared exactly.
SymmetryResult symmetry_check(const ClassFunction& counting, const ClassData& cd);

// (1/|G|) sum_h chi_k(L(h) h^-1)
std::vector<Complex> lambda_average(const CharacterTable& t, const Antimorphism& l);

// c_tau(chi_k) = (1/|G|) sum_g chi_k(g tau(g)), tau(g) = L(g^-1)
std::vector<Complex> twisted_fs_indicator(const CharacterTable& t, const Antimorphism& l);

// chi_k(L(g)) == chi_k(g) for every element g, within tol.
std::vector<bool> chi_L_invariance(const CharacterTable& t, const Antimorphism& l, double tol);

struct TwistReport {
  std::string group;
  std::string antimorphism;
  ClassFunction counting;
  std::vector<Complex> lambda_fourier;
  std::vector<Complex> lambda_average;
  std::vector<Complex> c_tau;
  std::vector<bool> chi_L_invariant;
  // round(lambda_fourier_k); +-1 on invariant characters.
  std::vector<long long> epsilon;
  std::size_t fixed_points = 0;
  long long degree_sum = 0;
  bool gelfand_model = false;
  // Extra diagnostics.
  bool counting_central = true;
  std::optional<std::pair<Element, Element>> noncentral_witness;
  bool symmetric = true;
  std::optional<std::size_t> asymmetric_class;
  long long counting_total = 0;
  // Max pairwise |path_a - path_b| over invariant characters.
  double path_discrepancy = 0;
  // max_j |N_L(j) - chi_G(j)|
  double distance_to_gelfand = 0;

  bool all_invariant() const;
};

// Runs every path and cross-check. Throws NumericalError when the coefficient
// paths disagree beyond tol on invariant characters, when a coefficient is not
// within 1e-6 of an integer, or when an identity that holds unconditionally
// (mass, fixed-point expansion, the fixed-point / all-ones equivalence) fails.
TwistReport analyze(const Antimorphism& l, const CharacterTable& t, double tol = kDefaultTolerance);

}  // namespace twistrace
