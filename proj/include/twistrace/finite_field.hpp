#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistrace/error.hpp"

namespace twistrace {

// An element of F_q encoded as its coefficient vector in base p:
// value = c_0 + c_1 p + ... + c_{d-1} p^{d-1}, i.e. c_0 + c_1 x + ... mod the modulus.
struct FieldElement {
  std::uint32_t value = 0;
  friend bool operator==(FieldElement, FieldElement) = default;
  friend auto operator<=>(FieldElement, FieldElement) = default;
};

// F_q for an odd prime power q = p^d, realized as F_p[x] / (modulus) with the
// least monic irreducible modulus of degree d. Arithmetic is table driven.
class FiniteField {
 public:
  static constexpr std::uint32_t kDefaultCap = 1024;

  // Throws DescriptorError when q is even or not a prime power, CapExceeded above cap.
  static FiniteField build(std::uint32_t q, std::uint32_t cap = kDefaultCap);

  std::uint32_t q() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return d_; }
  // Coefficients c_0..c_d of the monic modulus (c_d = 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement element(std::uint32_t value) const { return {value}; }

  FieldElement add(FieldElement a, FieldElement b) const { return {add_[a.value * q_ + b.value]}; }
  FieldElement mul(FieldElement a, FieldElement b) const { return {mul_[a.value * q_ + b.value]}; }
  FieldElement neg(FieldElement a) const { return {neg_[a.value]}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  // Throws std::domain_error for zero.
  FieldElement inv(FieldElement a) const;
  bool is_square(FieldElement a) const { return square_[a.value]; }

  // Least element (by encoding) of multiplicative order q - 1.
  FieldElement generator() const { return generator_; }
  std::uint32_t multiplicative_order(FieldElement a) const;
  // Least non-square (by encoding).
  FieldElement non_square() const;

  // Exhaustive field-axiom check for q <= limit; nullopt when every axiom holds.
  std::optional<std::string> verify_axioms(std::uint32_t limit = 81) const;

  std::string to_string(FieldElement a) const;

 private:
  FiniteField() = default;

  std::uint32_t q_ = 0, p_ = 0, d_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
  std::vector<bool> square_;
  FieldElement generator_;
};

}  // namespace twistrace
