#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace twistrace {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;  // row-major
using IntVector = std::vector<BigInt>;

// All integer solutions of A x = b, as particular + Z-span(kernel_basis).
struct IntegerSolutionSet {
  std::optional<IntVector> particular;  // absent when A x = b has no integer solution
  std::vector<IntVector> kernel_basis;  // basis of {x in Z^n : A x = 0}

  bool empty() const { return !particular.has_value(); }
};

// Column-style Hermite elimination: A U = H with U unimodular and H in column
// echelon form. Exact throughout.
IntegerSolutionSet solve_integer_system(const IntMatrix& a, const IntVector& b);

IntVector multiply(const IntMatrix& a, const IntVector& x);

}  // namespace twistrace
