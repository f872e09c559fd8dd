#include "twistrace/integer_solver.hpp"

#include <stdexcept>

namespace twistrace {

namespace {

struct Bezout {
  BigInt g, s, t;  // s*a + t*b = g = gcd(a, b) >= 0
};

Bezout extended_gcd(BigInt a, BigInt b) {
  BigInt s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const BigInt quot = a / b;
    BigInt tmp = a - quot * b;
    a = b;
    b = tmp;
    tmp = s0 - quot * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - quot * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (a < 0) return {-a, -s0, -t0};
  return {a, s0, t0};
}

}  // namespace

IntVector multiply(const IntMatrix& a, const IntVector& x) {
  IntVector out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw std::invalid_argument("dimension mismatch in integer product");
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
  }
  return out;
}

IntegerSolutionSet solve_integer_system(const IntMatrix& a, const IntVector& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw std::invalid_argument("right-hand side length differs from row count");
  const std::size_t n = m ? a[0].size() : 0;
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("ragged integer matrix");

  IntMatrix h = a;
  IntMatrix u(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

  // new_c = s*c + t*d, new_d = -(y/g)*c + (x/g)*d, determinant 1
  auto combine = [&](std::size_t c, std::size_t d, const BigInt& s, const BigInt& t, const BigInt& p,
                     const BigInt& r) {
    for (std::size_t i = 0; i < m; ++i) {
      const BigInt hc = h[i][c], hd = h[i][d];
      h[i][c] = s * hc + t * hd;
      h[i][d] = p * hc + r * hd;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const BigInt uc = u[i][c], ud = u[i][d];
      u[i][c] = s * uc + t * ud;
      u[i][d] = p * uc + r * ud;
    }
  };

  std::vector<std::size_t> pivot_rows;
  std::size_t col = 0;
  for (std::size_t row = 0; row < m && col < n; ++row) {
    for (std::size_t j = col + 1; j < n; ++j) {
      if (h[row][j] == 0) continue;
      const BigInt x = h[row][col], y = h[row][j];
      const Bezout bz = extended_gcd(x, y);
      combine(col, j, bz.s, bz.t, -(y / bz.g), x / bz.g);
    }
    if (h[row][col] != 0) {
      pivot_rows.push_back(row);
      ++col;
    }
  }
  const std::size_t rank = col;

  IntegerSolutionSet out;
  for (std::size_t k = rank; k < n; ++k) {
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = u[i][k];
    out.kernel_basis.push_back(std::move(v));
  }

  IntVector y(n, 0);
  for (std::size_t k = 0; k < rank; ++k) {
    const std::size_t row = pivot_rows[k];
    BigInt rest = b[row];
    for (std::size_t l = 0; l < k; ++l) rest -= h[row][l] * y[l];
    if (rest % h[row][k] != 0) return out;
    y[k] = rest / h[row][k];
  }
  for (std::size_t row = 0; row < m; ++row) {
    BigInt acc = 0;
    for (std::size_t l = 0; l < rank; ++l) acc += h[row][l] * y[l];
    if (acc != b[row]) return out;
  }
  IntVector x(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < rank; ++k) x[i] += u[i][k] * y[k];
  out.particular = std::move(x);
  return out;
}

}  // namespace twistrace
