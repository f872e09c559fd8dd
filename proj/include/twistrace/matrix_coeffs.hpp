#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "twistrace/char_table.hpp"

namespace twistrace {

using Operator = Eigen::MatrixXcd;

inline constexpr std::size_t kDefaultOperatorCap = 64;

// L^2(G) with the delta basis indexed by element. Operators that permute the
// basis are stored as pullbacks: (P f)(h) = f(p(h)).
class RegularSpace {
 public:
  RegularSpace(FiniteGroup g, std::size_t cap = kDefaultOperatorCap);

  const FiniteGroup& group() const { return group_; }
  std::size_t dimension() const { return group_.order(); }

  // (rho_g f)(h) = f(h g)
  std::vector<Element> rho_pullback(Element g) const;
  // (sigma_g f)(h) = f(g^-1 h)
  std::vector<Element> sigma_pullback(Element g) const;

  Operator rho(Element g) const { return dense(rho_pullback(g)); }
  Operator sigma(Element g) const { return dense(sigma_pullback(g)); }
  Operator dense(const std::vector<Element>& pullback) const;

 private:
  FiniteGroup group_;
};

// (P X) for the pullback operator P: row h of the result is row p(h) of X.
Operator apply_rows(const std::vector<Element>& pullback, const Operator& x);
// (X P): column p(h) of the result is column h of X.
Operator apply_columns(const Operator& x, const std::vector<Element>& pullback);

struct ProjectorCheck {
  double idempotence = 0;    // max_k |P_k P_k - P_k|
  double orthogonality = 0;  // max_{k != l} |P_k P_l|
  double completeness = 0;   // |sum_k P_k - I|
  double rank = 0;           // max_k |tr P_k - n_k^2|
  double max() const { return std::max({idempotence, orthogonality, completeness, rank}); }
};

// P_k = (n_k / |G|) sum_g conj(chi_k(g)) rho_g
std::vector<Operator> isotypic_projectors(const CharacterTable& t, const RegularSpace& reg);
ProjectorCheck check_projectors(const std::vector<Operator>& projectors, const CharacterTable& t);

// Unitary irreducible representations read off one copy of each isotypic
// component, and the matrix-coefficient functions e_ij^k assembled as the
// columns of `functions` in (k, i, j) order.
struct MatrixCoeffBasis {
  FiniteGroup group;
  std::vector<long long> degrees;
  // irreps[k][g] is the n_k x n_k matrix pi_k(g).
  std::vector<std::vector<Operator>> irreps;
  Operator functions;
  std::vector<std::array<std::size_t, 3>> labels;  // column -> (k, i, j)
  std::vector<std::size_t> offsets;                // first column of character k

  std::size_t column(std::size_t k, std::size_t i, std::size_t j) const {
    return offsets[k] + i * static_cast<std::size_t>(degrees[k]) + j;
  }
  // (sum_k n_k / |G|) E^*, the inverse of `functions` by Schur orthogonality.
  Operator inverse_functions() const;
};

struct IrrepCheck {
  double unitarity = 0;
  double homomorphism = 0;
  double character = 0;  // max |tr pi_k(g) - chi_k(g)|
  double conjugate_transpose = 0;        // max |e_ij(g^-1) - conj(e_ji(g))|
  double schur = 0;      // max |E^* E - diag(|G| / n_k)| / |G|
  double max() const { return std::max({unitarity, homomorphism, character, conjugate_transpose, schur}); }
};

// Splits each isotypic image with a random Hermitian element of the commutant
// (left translations), which acts on the multiplicity space only. Redraws up to
// 8 times when its spectrum does not separate into n_k clusters of size n_k.
MatrixCoeffBasis extract_irreps(const std::vector<Operator>& projectors, const RegularSpace& reg,
                                const CharacterTable& t, std::uint64_t seed);

IrrepCheck check_irreps(const MatrixCoeffBasis& basis, const CharacterTable& t);

// T(e_ij^k) = e_ji^k, written in the delta basis.
Operator build_T(const MatrixCoeffBasis& basis);

// sigma~_g(e_ij^k) = sum_l e_li^k(g) e_lj^k, written in the delta basis.
Operator build_sigma_tilde(const MatrixCoeffBasis& basis, Element g);

struct Theorem1Report {
  double intertwining = 0;  // max_g |rho_g T - T sigma~_g|
  double commuting = 0;     // max_{g,h} |rho_g sigma~_h - sigma~_h rho_g|
  double homomorphism = 0;  // max_{g,h} |sigma~_g sigma~_h - sigma~_{gh}|
  double trace = 0;         // max_g |tr(rho_g T) - chi_G(g)|
  double involution = 0;    // |T^2 - I|
  IrrepCheck irreps;
  std::vector<Complex> traces_by_class;

  double max() const { return std::max({intertwining, commuting, homomorphism, trace, involution, irreps.max()}); }
  bool passed(double tol) const { return max() <= tol; }
};

Theorem1Report verify_theorem1(const MatrixCoeffBasis& basis, const Operator& t_op, const CharacterTable& t);

struct Prop2Report {
  bool characters_invariant = false;
  std::size_t fixed_points = 0;
  long long degree_sum = 0;
  bool hypotheses_hold = false;
  std::string failed_hypothesis;

  // Basis-independent, exact: permutation-operator identities.
  long long trace_L_star = 0;
  bool trace_matches_counting = false;  // tr(rho_g L*) = N_L(g) for all g
  bool intertwining_exact = false;      // rho_g L* = L* sigma_{L(g)^-1}
  bool commuting_exact = false;         // rho_g sigma_{L(g)^-1} = sigma_{L(g)^-1} rho_g

  // Only filled when the hypotheses hold.
  double distance_unaligned = 0;  // |L* - T| with the extracted basis
  double distance_aligned = 0;    // |L* - T| after alignment
  double transpose_residual = 0;        // max |e_ij(L(g)) - e_ji(g)| in the aligned basis
  double takagi_residual = 0;     // max_k |C_k - V_k V_k^T|
  double symmetry_residual = 0;   // max_k |C_k^T - C_k|
};

// Checks the hypotheses first (every chi_k invariant under L, fixed points of L
// = sum n_k). When they hold, conjugates each irrep by the unitary V_k with
// C_k = V_k V_k^T, where pi_k(L(g)) = C_k pi_k(g)^T C_k^-1, so that
// e_ij(L(g)) = e_ji(g), and reports |L* - T| in that basis.
Prop2Report verify_prop2(const Antimorphism& l, const MatrixCoeffBasis& basis, const CharacterTable& t,
                         std::uint64_t seed, double tol = kDefaultTolerance);

// Irreps conjugated so that pi_k(L(g)) = pi_k(g)^T. Requires the hypotheses of verify_prop2.
MatrixCoeffBasis align_to_antimorphism(const Antimorphism& l, const MatrixCoeffBasis& basis,
                                       std::uint64_t seed, double* takagi_residual = nullptr,
                                       double* symmetry_residual = nullptr);

}  // namespace twistrace
