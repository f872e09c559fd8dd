#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "twistrace/class_function.hpp"

namespace twistrace {

// Structure constants of the class algebra:
// at(i, j, k) = #{(x, y) in C_i x C_j : x y = rep(C_k)}.
class ClassCoefficients {
 public:
  explicit ClassCoefficients(std::size_t r) : r_(r), data_(r * r * r, 0) {}
  std::size_t num_classes() const { return r_; }
  long long at(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * r_ + j) * r_ + k]; }
  long long& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * r_ + j) * r_ + k]; }

 private:
  std::size_t r_;
  std::vector<long long> data_;
};

ClassCoefficients class_multiplication_coefficients(const ClassData& cd, const FiniteGroup& g);

struct TableResiduals {
  double row = 0;          // max |<chi_k, chi_l> - delta_kl|
  double column = 0;       // max |sum_k chi_k(i) conj(chi_k(j)) sqrt(s_i s_j)/|G| - delta_ij|
  double conjugation = 0;  // max |chi_k(inverse class of j) - conj(chi_k(j))|
  double max() const { return std::max({row, column, conjugation}); }
};

struct CharacterTable {
  std::shared_ptr<const ClassSpace> space;
  // Irreducible characters sorted by degree, then by value tuples (real part,
  // imaginary part per class, rounded to 1e-6) in descending lexicographic
  // order, which puts the trivial character first.
  std::vector<ClassFunction> rows;
  std::vector<long long> degrees;
  // Largest orthogonality / conjugation residual observed when the table was accepted.
  double residual = 0;
  std::uint64_t seed = 0;
  double tol = 0;

  std::size_t num_classes() const { return space->num_classes(); }
  std::size_t size() const { return rows.size(); }
};

inline constexpr double kDefaultTolerance = 1e-8;
// Slack allowed when a floating quantity is read as an integer.
inline constexpr double kIntegralSlack = 1e-6;

// Joint eigenvectors of a random real combination of the class matrices.
// Redraws the combination (at most 8 attempts) when eigenvalues cluster or the
// result misses `tol`; throws NumericalError once the attempts are exhausted.
CharacterTable character_table(const FiniteGroup& g, std::uint64_t seed = 0,
                               double tol = kDefaultTolerance);
CharacterTable character_table(const FiniteGroup& g, std::shared_ptr<const ClassSpace> space,
                               std::uint64_t seed, double tol);

TableResiduals table_residuals(const CharacterTable& t);

// Throws NumericalError unless every table invariant holds: orthogonality and
// conjugation residuals within tol, integral degrees that divide |G|, chi(e) = n_k,
// sum n_k^2 = |G|.
void verify_table(const CharacterTable& t, double tol);

ClassFunction gelfand_character(const CharacterTable& t);

// lambda_k = <f, chi_k>
std::vector<Complex> fourier_coefficients(const ClassFunction& f, const CharacterTable& t);
ClassFunction reconstruct(std::span<const Complex> coefficients, const CharacterTable& t);

class NotSubgroup : public Error {
 public:
  NotSubgroup(Element a, Element b);
  Element a() const { return a_; }
  Element b() const { return b_; }

 private:
  Element a_, b_;
};

class NotClassFunction : public Error {
 public:
  NotClassFunction(Element x, Element y);
  Element x() const { return x_; }
  Element y() const { return y_; }

 private:
  Element x_, y_;
};

// Frobenius formula Ind(g) = (1/|H|) sum_{x in G} f^(x g x^-1), f^ = f on H and 0
// off H. `subgroup` lists the elements of H; f_on_subgroup[i] is f at subgroup[i].
ClassFunction induced_character(const FiniteGroup& g, std::shared_ptr<const ClassSpace> space,
                                std::span<const Element> subgroup,
                                std::span<const Complex> f_on_subgroup);

}  // namespace twistrace
