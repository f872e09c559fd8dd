#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "twistrace/char_table.hpp"
#include "twistrace/descriptor.hpp"
#include "twistrace/pgl2.hpp"

using namespace twistrace;

namespace {

std::vector<long long> ints(const ClassFunction& f) { return to_integers(f); }

// Orthogonality recomputed from scratch over elements rather than classes.
double element_row_residual(const CharacterTable& t, const FiniteGroup& g) {
  const auto& cd = t.space->classes;
  double worst = 0;
  for (std::size_t k = 0; k < t.size(); ++k)
    for (std::size_t l = 0; l < t.size(); ++l) {
      Complex acc = 0;
      for (Element x = 0; x < g.order(); ++x) acc += t.rows[k][cd.class_of[x]] * std::conj(t.rows[l][cd.class_of[x]]);
      worst = std::max(worst, std::abs(acc / static_cast<double>(g.order()) - (k == l ? 1.0 : 0.0)));
    }
  return worst;
}

}  // namespace

TEST_CASE("class multiplication coefficients match brute force") {
  const FiniteGroup c2 = build_group("cyclic:2");
  const ClassCoefficients a2 = class_multiplication_coefficients(conjugacy_classes(c2), c2);
  CHECK(a2.at(1, 1, 0) == 1);
  CHECK(a2.at(1, 1, 1) == 0);

  for (const char* d : {"sym:4", "dihedral:5", "pgl2:3"}) {
    CAPTURE(d);
    const FiniteGroup g = build_group(d);
    const ClassData cd = conjugacy_classes(g);
    const ClassCoefficients a = class_multiplication_coefficients(cd, g);
    const std::size_t r = cd.num_classes();
    std::vector<long long> brute(r * r * r, 0);
    for (Element x = 0; x < g.order(); ++x)
      for (Element y = 0; y < g.order(); ++y) {
        const Element z = g.mul(x, y);
        const std::size_t k = cd.class_of[z];
        if (z == cd.reps[k]) ++brute[(cd.class_of[x] * r + cd.class_of[y]) * r + k];
      }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) REQUIRE(a.at(i, j, k) == brute[(i * r + j) * r + k]);
  }
}

TEST_CASE("small tables") {
  const CharacterTable c2 = character_table(build_group("cyclic:2"));
  CHECK(ints(c2.rows[0]) == std::vector<long long>{1, 1});
  CHECK(ints(c2.rows[1]) == std::vector<long long>{1, -1});

  const CharacterTable trivial = character_table(build_group("cyclic:1"));
  CHECK(trivial.size() == 1);
  CHECK(ints(trivial.rows[0]) == std::vector<long long>{1});

  const CharacterTable s3 = character_table(build_group("sym:3"));
  CHECK(s3.degrees == std::vector<long long>{1, 1, 2});
  CHECK(ints(s3.rows[2]) == std::vector<long long>{2, 0, -1});

  const CharacterTable p5 = character_table(build_group("pgl2:5"));
  CHECK(p5.degrees == std::vector<long long>{1, 1, 4, 4, 5, 5, 6});
}

TEST_CASE("cyclic tables consist of roots of unity") {
  const CharacterTable c4 = character_table(build_group("cyclic:4"));
  const auto& cd = c4.space->classes;
  for (const auto& row : c4.rows) {
    const Complex gen = row[cd.class_of[1]];
    CHECK(std::abs(gen * gen * gen * gen - 1.0) < 1e-12);
    for (Element x = 0; x < 4; ++x) CHECK(std::abs(row[cd.class_of[x]] - std::pow(gen, static_cast<int>(x))) < 1e-12);
  }
}

TEST_CASE("table invariants across the family battery") {
  std::vector<std::string> battery;
  for (int n = 1; n <= 12; ++n) battery.push_back("cyclic:" + std::to_string(n));
  for (int n = 1; n <= 8; ++n) battery.push_back("dihedral:" + std::to_string(n));
  for (int n = 1; n <= 5; ++n) battery.push_back("sym:" + std::to_string(n));
  for (int q : {3, 5, 7, 9}) battery.push_back("pgl2:" + std::to_string(q));
  for (const auto& d : battery) {
    CAPTURE(d);
    const FiniteGroup g = build_group(d);
    const CharacterTable t = character_table(g);
    CHECK_NOTHROW(verify_table(t, 1e-8));
    CHECK(t.size() == t.num_classes());
    long long squares = 0;
    for (long long n : t.degrees) {
      squares += n * n;
      CHECK(static_cast<long long>(g.order()) % n == 0);
    }
    CHECK(squares == static_cast<long long>(g.order()));
    CHECK(element_row_residual(t, g) < 1e-8);
    CHECK(ints(t.rows[0]) == std::vector<long long>(t.num_classes(), 1));
  }
}

TEST_CASE("the table does not depend on the seed") {
  const FiniteGroup g = build_group("pgl2:5");
  const CharacterTable a = character_table(g, 0);
  for (std::uint64_t seed : {1ull, 7ull, 123456789ull}) {
    const CharacterTable b = character_table(g, seed);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(max_distance(a.rows[k], b.rows[k]) < 1e-9);
  }
}

TEST_CASE("quaternion table") {
  const FiniteGroup q8 = oracle::quaternion_group();
  const CharacterTable t = character_table(q8);
  CHECK(t.degrees == std::vector<long long>{1, 1, 1, 1, 2});
  CHECK(element_row_residual(t, q8) < 1e-10);
}

TEST_CASE("gelfand character and Fourier round trip") {
  CHECK(ints(gelfand_character(character_table(build_group("cyclic:2")))) == std::vector<long long>{2, 0});
  CHECK(ints(gelfand_character(character_table(build_group("sym:3")))) == std::vector<long long>{4, 0, 1});
  // For sym:n the Gelfand character counts square roots.
  for (const char* d : {"sym:4", "sym:5"}) {
    const FiniteGroup g = build_group(d);
    const CharacterTable t = character_table(g);
    const auto roots = oracle::square_roots(g);
    const auto gel = ints(gelfand_character(t));
    for (std::size_t j = 0; j < t.num_classes(); ++j) CHECK(gel[j] == roots[t.space->classes.reps[j]]);
  }
  const CharacterTable t = character_table(build_group("dihedral:6"));
  ClassFunction f{t.space, {}};
  for (std::size_t j = 0; j < t.num_classes(); ++j) f.values.emplace_back(0.5 * j, -1.0 * j * j);
  const auto coeffs = fourier_coefficients(f, t);
  CHECK(max_distance(reconstruct(coeffs, t), f) < 1e-10);
  CHECK(std::abs(inner_product(t.rows[1], t.rows[1]) - 1.0) < 1e-12);
}

TEST_CASE("class functions over different groups do not mix") {
  const CharacterTable a = character_table(build_group("cyclic:3"));
  const CharacterTable b = character_table(build_group("sym:3"));
  CHECK_THROWS_AS(inner_product(a.rows[0], b.rows[0]), GroupMismatch);
  CHECK_THROWS_AS(a.rows[0] + b.rows[1], GroupMismatch);
}

TEST_CASE("induction matches the coset fixed-point count") {
  const BuiltGroup b = build_group_ex("pgl2:3");
  const auto space = make_class_space(b.group);
  const auto torus = coxeter_torus(*b.pgl2);
  const std::vector<Complex> ones(torus.size(), 1.0);
  const ClassFunction ind = induced_character(b.group, space, torus, ones);
  CHECK(ints(ind) == std::vector<long long>{6, 0, 2, 0, 2});
  for (std::size_t j = 0; j < space->num_classes(); ++j)
    CHECK(ints(ind)[j] == oracle::induced_trivial(b.group, torus, space->classes.reps[j]));

  // Inducing the trivial character of the trivial subgroup gives the regular character.
  const FiniteGroup s4 = build_group("sym:4");
  const auto s4_space = make_class_space(s4);
  const std::vector<Element> e{s4.identity()};
  const std::vector<Complex> one{1.0};
  CHECK(ints(induced_character(s4, s4_space, e, one)) == std::vector<long long>{24, 0, 0, 0, 0});
}

TEST_CASE("induction rejects bad input") {
  const FiniteGroup s3 = build_group("sym:3");
  const auto space = make_class_space(s3);
  const std::vector<Element> not_closed{0, 1, 2};
  const std::vector<Complex> ones(3, 1.0);
  CHECK_THROWS_AS(induced_character(s3, space, not_closed, ones), NotSubgroup);

  // The rotation subgroup of sym:3 with a function that is not a class function of it
  // is still fine (abelian); the whole group with non-constant values on a class is not.
  std::vector<Element> all(6);
  std::iota(all.begin(), all.end(), 0);
  std::vector<Complex> f(6, 1.0);
  f[1] = 5.0;
  CHECK_THROWS_AS(induced_character(s3, space, all, f), NotClassFunction);
}
