#include "twistrace/char_table.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>

#include "twistrace/parallel.hpp"
#include "twistrace/random.hpp"

namespace twistrace {

ClassCoefficients class_multiplication_coefficients(const ClassData& cd, const FiniteGroup& g) {
  const std::size_t r = cd.num_classes();
  const std::size_t n = g.order();
  ClassCoefficients a(r);
  // x y = rep_k with x in C_i forces y = x^-1 rep_k, so each k is a single pass.
  parallel_for(r, [&](std::size_t k) {
    for (std::size_t x = 0; x < n; ++x) {
      const auto xe = static_cast<Element>(x);
      const Element y = g.mul(g.inv(xe), cd.reps[k]);
      ++a.at(cd.class_of[x], cd.class_of[y], k);
    }
  }, 1);
  return a;
}

namespace {

constexpr int kMaxAttempts = 8;

double snap(double x) {
  const double r = std::round(x);
  return std::abs(x - r) <= 1e-12 ? r + 0.0 : x;
}

long long grid(double x) { return std::llround(x * 1e6); }

bool row_before(const ClassFunction& a, long long da, const ClassFunction& b, long long db) {
  if (da != db) return da < db;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const long long ar = grid(a[j].real()), br = grid(b[j].real());
    if (ar != br) return ar > br;
    const long long ai = grid(a[j].imag()), bi = grid(b[j].imag());
    if (ai != bi) return ai > bi;
  }
  return false;
}

struct Attempt {
  std::optional<CharacterTable> table;
  std::string failure;
};

Attempt attempt_table(const ClassCoefficients& a, const std::shared_ptr<const ClassSpace>& space,
                      SplitMix64& rng, double tol) {
  const std::size_t r = a.num_classes();
  const auto& sizes = space->classes.sizes;
  const double order = static_cast<double>(space->order);

  std::vector<double> c(r);
  for (auto& v : c) v = rng.uniform_signed();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) += c[i] * static_cast<double>(a.at(i, j, k));

  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, true);
  if (solver.info() != Eigen::Success) return {std::nullopt, "eigen-decomposition did not converge"};
  const Eigen::VectorXcd lambda = solver.eigenvalues();
  double radius = 0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) radius = std::max(radius, std::abs(lambda(i)));
  const double separation = 1e3 * std::numeric_limits<double>::epsilon() * std::max(radius, 1.0);
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    for (Eigen::Index j = i + 1; j < lambda.size(); ++j)
      if (std::abs(lambda(i) - lambda(j)) < separation) return {std::nullopt, "eigenvalue cluster"};

  const Eigen::MatrixXcd vecs = solver.eigenvectors();
  CharacterTable t;
  t.space = space;
  for (std::size_t k = 0; k < r; ++k) {
    const Complex w0 = vecs(0, static_cast<Eigen::Index>(k));
    if (std::abs(w0) < 1e-12) return {std::nullopt, "eigenvector vanishes at the identity class"};
    std::vector<Complex> ratio(r);
    double norm = 0;
    for (std::size_t j = 0; j < r; ++j) {
      // central character omega(K_j) = |C_j| chi(g_j) / chi(1)
      ratio[j] = vecs(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) / w0 /
                 static_cast<double>(sizes[j]);
      norm += static_cast<double>(sizes[j]) * std::norm(ratio[j]);
    }
    const double degree = std::sqrt(order / norm);
    const double rounded = std::round(degree);
    if (std::abs(degree - rounded) > kIntegralSlack || rounded < 1) {
      std::ostringstream os;
      os << "non-integral degree " << degree;
      return {std::nullopt, os.str()};
    }
    ClassFunction row{space, std::vector<Complex>(r)};
    for (std::size_t j = 0; j < r; ++j) {
      const Complex v = rounded * ratio[j];
      row[j] = Complex(snap(v.real()), snap(v.imag()));
    }
    row[0] = rounded;
    t.rows.push_back(std::move(row));
    t.degrees.push_back(static_cast<long long>(rounded));
  }

  std::vector<std::size_t> order_idx(r);
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t x, std::size_t y) {
    return row_before(t.rows[x], t.degrees[x], t.rows[y], t.degrees[y]);
  });
  CharacterTable sorted;
  sorted.space = space;
  for (std::size_t k : order_idx) {
    sorted.rows.push_back(std::move(t.rows[k]));
    sorted.degrees.push_back(t.degrees[k]);
  }
  try {
    verify_table(sorted, tol);
  } catch (const NumericalError& e) {
    return {std::nullopt, e.what()};
  }
  sorted.residual = table_residuals(sorted).max();
  return {std::move(sorted), {}};
}

}  // namespace

CharacterTable character_table(const FiniteGroup& g, std::uint64_t seed, double tol) {
  return character_table(g, make_class_space(g), seed, tol);
}

CharacterTable character_table(const FiniteGroup& g, std::shared_ptr<const ClassSpace> space,
                               std::uint64_t seed, double tol) {
  if (!(tol > 0)) throw Error("tolerance must be positive");
  const ClassCoefficients a = class_multiplication_coefficients(space->classes, g);
  SplitMix64 rng(seed);
  std::string last;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Attempt result = attempt_table(a, space, rng, tol);
    if (result.table) {
      result.table->seed = seed;
      result.table->tol = tol;
      return std::move(*result.table);
    }
    last = result.failure;
  }
  throw NumericalError(g.label() + ": character table failed after " + std::to_string(kMaxAttempts) +
                       " random combinations (last: " + last + ")");
}

TableResiduals table_residuals(const CharacterTable& t) {
  const std::size_t r = t.num_classes();
  const auto& cd = t.space->classes;
  const double order = static_cast<double>(t.space->order);
  TableResiduals res;
  for (std::size_t k = 0; k < t.size(); ++k)
    for (std::size_t l = 0; l < t.size(); ++l) {
      const Complex ip = inner_product(t.rows[k], t.rows[l]);
      res.row = std::max(res.row, std::abs(ip - Complex(k == l ? 1.0 : 0.0)));
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Complex acc = 0;
      for (const auto& row : t.rows) acc += row[i] * std::conj(row[j]);
      acc *= std::sqrt(static_cast<double>(cd.sizes[i]) * static_cast<double>(cd.sizes[j])) / order;
      res.column = std::max(res.column, std::abs(acc - Complex(i == j ? 1.0 : 0.0)));
    }
  for (const auto& row : t.rows)
    for (std::size_t j = 0; j < r; ++j)
      res.conjugation = std::max(res.conjugation, std::abs(row[cd.inverse_class[j]] - std::conj(row[j])));
  return res;
}

void verify_table(const CharacterTable& t, double tol) {
  const std::string& name = t.space->group;
  const std::size_t r = t.num_classes();
  if (t.rows.size() != r || t.degrees.size() != r)
    throw NumericalError(name + ": table must have one row per class");
  long long square_sum = 0;
  for (std::size_t k = 0; k < r; ++k) {
    if (t.rows[k].space->num_classes() != r) throw NumericalError(name + ": row length mismatch");
    const long long n = t.degrees[k];
    if (n < 1 || static_cast<long long>(t.space->order) % n != 0)
      throw NumericalError(name + ": degree " + std::to_string(n) + " does not divide the group order");
    if (std::abs(t.rows[k][0] - Complex(static_cast<double>(n))) > kIntegralSlack)
      throw NumericalError(name + ": row value at the identity differs from its degree");
    square_sum += n * n;
  }
  if (square_sum != static_cast<long long>(t.space->order))
    throw NumericalError(name + ": sum of squared degrees " + std::to_string(square_sum) +
                         " != " + std::to_string(t.space->order));
  const TableResiduals res = table_residuals(t);
  if (!(res.max() <= tol)) {
    std::ostringstream os;
    os << name << ": orthogonality residuals (row " << res.row << ", column " << res.column
       << ", conjugation " << res.conjugation << ") exceed " << tol;
    throw NumericalError(os.str());
  }
}

ClassFunction gelfand_character(const CharacterTable& t) {
  ClassFunction sum = constant_function(t.space, 0.0);
  for (const auto& row : t.rows) sum = sum + row;
  return sum;
}

std::vector<Complex> fourier_coefficients(const ClassFunction& f, const CharacterTable& t) {
  std::vector<Complex> out;
  out.reserve(t.size());
  for (const auto& row : t.rows) out.push_back(inner_product(f, row));
  return out;
}

ClassFunction reconstruct(std::span<const Complex> coefficients, const CharacterTable& t) {
  if (coefficients.size() != t.size()) throw GroupMismatch("coefficient count differs from table size");
  ClassFunction out = constant_function(t.space, 0.0);
  for (std::size_t k = 0; k < t.size(); ++k) out = out + coefficients[k] * t.rows[k];
  return out;
}

NotSubgroup::NotSubgroup(Element a, Element b)
    : Error("element subset is not a subgroup: product/inverse of " + std::to_string(a) + ", " +
            std::to_string(b) + " leaves it"),
      a_(a),
      b_(b) {}

NotClassFunction::NotClassFunction(Element x, Element y)
    : Error("function is not constant on subgroup conjugacy classes: " + std::to_string(x) + " ~ " +
            std::to_string(y)),
      x_(x),
      y_(y) {}

ClassFunction induced_character(const FiniteGroup& g, std::shared_ptr<const ClassSpace> space,
                                std::span<const Element> subgroup,
                                std::span<const Complex> f_on_subgroup) {
  if (space->group != g.label() || space->order != g.order())
    throw GroupMismatch("class space does not belong to " + g.label());
  if (subgroup.size() != f_on_subgroup.size())
    throw GroupMismatch("subgroup function must have one value per subgroup element");
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> position(g.order(), kAbsent);
  for (std::size_t i = 0; i < subgroup.size(); ++i) {
    if (subgroup[i] >= g.order() || position[subgroup[i]] != kAbsent)
      throw NotSubgroup(subgroup[i], subgroup[i]);
    position[subgroup[i]] = i;
  }
  if (subgroup.empty()) throw NotSubgroup(g.identity(), g.identity());
  if (position[g.identity()] == kAbsent) throw NotSubgroup(g.identity(), g.identity());
  for (Element a : subgroup) {
    if (position[g.inv(a)] == kAbsent) throw NotSubgroup(a, a);
    for (Element b : subgroup)
      if (position[g.mul(a, b)] == kAbsent) throw NotSubgroup(a, b);
  }
  for (std::size_t i = 0; i < subgroup.size(); ++i)
    for (Element h : subgroup) {
      const Element y = g.mul(g.mul(h, subgroup[i]), g.inv(h));
      if (std::abs(f_on_subgroup[position[y]] - f_on_subgroup[i]) > kIntegralSlack)
        throw NotClassFunction(subgroup[i], y);
    }

  const auto& cd = space->classes;
  const std::size_t n = g.order();
  ClassFunction out{space, std::vector<Complex>(cd.num_classes())};
  parallel_for(cd.num_classes(), [&](std::size_t j) {
    Complex acc = 0;
    for (std::size_t x = 0; x < n; ++x) {
      const auto xe = static_cast<Element>(x);
      const Element c = g.mul(g.mul(xe, cd.reps[j]), g.inv(xe));
      if (position[c] != kAbsent) acc += f_on_subgroup[position[c]];
    }
    out[j] = acc / static_cast<double>(subgroup.size());
  }, 1);
  return out;
}

}  // namespace twistrace
