#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "twistrace/group.hpp"

namespace twistrace {

using Complex = std::complex<double>;

// The class structure a class function lives on. Shared by every function over
// the same group so that mismatches are caught cheaply.
struct ClassSpace {
  std::string group;
  std::size_t order = 0;
  ClassData classes;

  std::size_t num_classes() const { return classes.num_classes(); }
};

std::shared_ptr<const ClassSpace> make_class_space(const FiniteGroup& g);

struct ClassFunction {
  std::shared_ptr<const ClassSpace> space;
  std::vector<Complex> values;

  std::size_t size() const { return values.size(); }
  const Complex& operator[](std::size_t j) const { return values[j]; }
  Complex& operator[](std::size_t j) { return values[j]; }
};

ClassFunction constant_function(std::shared_ptr<const ClassSpace> space, Complex value);
ClassFunction trivial_character(std::shared_ptr<const ClassSpace> space);

// Throws GroupMismatch unless a and b live on the same class structure.
void require_same_space(const ClassFunction& a, const ClassFunction& b);

// (1/|G|) sum_j |C_j| f(j) conj(h(j))
Complex inner_product(const ClassFunction& f, const ClassFunction& h);

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
// Pointwise product.
ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator*(Complex s, const ClassFunction& a);

// Largest |f(j) - h(j)|.
double max_distance(const ClassFunction& f, const ClassFunction& h);

// Rounds every value to the nearest integer; throws NumericalError when a real
// or imaginary part is more than `slack` away from an integer or the imaginary
// part is nonzero.
std::vector<long long> to_integers(const ClassFunction& f, double slack = 1e-6);

ClassFunction from_integers(std::shared_ptr<const ClassSpace> space, const std::vector<long long>& v);

}  // namespace twistrace
