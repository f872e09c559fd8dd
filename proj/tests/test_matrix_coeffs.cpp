#include <doctest.h>

#include "oracles.hpp"
#include "twistrace/descriptor.hpp"
#include "twistrace/matrix_coeffs.hpp"

using namespace twistrace;

namespace {

struct Built {
  FiniteGroup group;
  CharacterTable table;
  RegularSpace reg;
  std::vector<Operator> projectors;
  MatrixCoeffBasis basis;
};

Built build(const FiniteGroup& g, std::uint64_t seed = 0, std::size_t cap = kDefaultOperatorCap) {
  CharacterTable t = character_table(g);
  RegularSpace reg(g, cap);
  auto p = isotypic_projectors(t, reg);
  MatrixCoeffBasis b = extract_irreps(p, reg, t, seed);
  return {g, std::move(t), std::move(reg), std::move(p), std::move(b)};
}

}  // namespace

TEST_CASE("regular representations are commuting permutations") {
  const FiniteGroup s3 = build_group("sym:3");
  const RegularSpace reg(s3);
  for (Element g = 0; g < 6; ++g)
    for (Element h = 0; h < 6; ++h) {
      CHECK((reg.rho(g) * reg.sigma(h) - reg.sigma(h) * reg.rho(g)).norm() == 0.0);
      CHECK((reg.rho(g) * reg.rho(h) - reg.rho(s3.mul(g, h))).norm() == 0.0);
      CHECK((reg.sigma(g) * reg.sigma(h) - reg.sigma(s3.mul(g, h))).norm() == 0.0);
    }
  const Operator x = Operator::Random(6, 6);
  const auto p = reg.rho_pullback(4);
  CHECK((apply_rows(p, x) - reg.dense(p) * x).norm() == 0.0);
  CHECK((apply_columns(x, p) - x * reg.dense(p)).norm() == 0.0);
}

TEST_CASE("isotypic projectors") {
  const Built c1 = build(build_group("cyclic:1"));
  REQUIRE(c1.projectors.size() == 1);
  CHECK(std::abs(c1.projectors[0](0, 0) - 1.0) < 1e-15);

  const Built c2 = build(build_group("cyclic:2"));
  // even and odd parts
  CHECK(std::abs(c2.projectors[0](0, 1) - 0.5) < 1e-15);
  CHECK(std::abs(c2.projectors[1](0, 1) + 0.5) < 1e-15);

  const Built s3 = build(build_group("sym:3"));
  std::vector<double> ranks;
  for (const auto& p : s3.projectors) ranks.push_back(std::round(p.trace().real()));
  CHECK(ranks == std::vector<double>{1, 1, 4});
  CHECK(check_projectors(s3.projectors, s3.table).max() < 1e-12);
}

TEST_CASE("extracted irreps") {
  const Built s3 = build(build_group("sym:3"));
  CHECK(check_irreps(s3.basis, s3.table).max() < 1e-10);
  const auto& cd = s3.table.space->classes;
  for (std::size_t j = 0; j < 3; ++j) {
    const Complex tr = s3.basis.irreps[2][cd.reps[j]].trace();
    CHECK(std::abs(tr - std::vector<double>{2, 0, -1}[j]) < 1e-10);
  }

  const Built c4 = build(build_group("cyclic:4"));
  for (std::size_t k = 0; k < 4; ++k)
    for (Element g = 0; g < 4; ++g) {
      CHECK(c4.basis.irreps[k][g].rows() == 1);
      CHECK(std::abs(c4.basis.irreps[k][g](0, 0) - c4.table.rows[k][c4.table.space->classes.class_of[g]]) < 1e-12);
    }

  for (const char* d : {"dihedral:4", "sym:4", "pgl2:3", "dihedral:8"}) {
    CAPTURE(d);
    const Built b = build(build_group(d), 17);
    CHECK(check_projectors(b.projectors, b.table).max() < 1e-9);
    CHECK(check_irreps(b.basis, b.table).max() < 1e-9);
  }
  const Built q8 = build(oracle::quaternion_group());
  CHECK(check_irreps(q8.basis, q8.table).max() < 1e-10);
}

TEST_CASE("T is the transposition involution") {
  const Built s3 = build(build_group("sym:3"));
  const Operator t = build_T(s3.basis);
  CHECK((t * t - Operator::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(std::abs(t.trace() - 4.0) < 1e-10);
  // one-dimensional characters are fixed
  for (std::size_t k : {0, 1}) {
    const auto col = s3.basis.functions.col(static_cast<Eigen::Index>(s3.basis.column(k, 0, 0)));
    CHECK((t * col - col).norm() < 1e-10);
  }
}

TEST_CASE("operator T residuals") {
  for (const char* d : {"cyclic:2", "sym:3", "dihedral:4", "sym:4", "pgl2:3"}) {
    CAPTURE(d);
    const Built b = build(build_group(d));
    const Theorem1Report r = verify_theorem1(b.basis, build_T(b.basis), b.table);
    CHECK(r.passed(1e-9));
    const auto gel = to_integers(gelfand_character(b.table));
    for (std::size_t j = 0; j < gel.size(); ++j) CHECK(std::abs(r.traces_by_class[j] - double(gel[j])) < 1e-9);
  }
  const Built c2 = build(build_group("cyclic:2"));
  const Theorem1Report r = verify_theorem1(c2.basis, build_T(c2.basis), c2.table);
  CHECK(r.max() < 1e-14);
  CHECK(std::abs(r.traces_by_class[0] - 2.0) < 1e-15);
  CHECK(std::abs(r.traces_by_class[1]) < 1e-15);

  const Built d4 = build(build_group("dihedral:4"));
  CHECK(std::abs(verify_theorem1(d4.basis, build_T(d4.basis), d4.table).traces_by_class[0] - 6.0) < 1e-10);
}

TEST_CASE("L* equals T after alignment") {
  const Built s3 = build(build_group("sym:3"));
  const Prop2Report r = verify_prop2(inversion_antimorphism(s3.group), s3.basis, s3.table, 0);
  CHECK(r.hypotheses_hold);
  CHECK(r.trace_L_star == 4);
  CHECK(r.trace_matches_counting);
  CHECK(r.intertwining_exact);
  CHECK(r.commuting_exact);
  CHECK(r.distance_aligned < 1e-9);
  CHECK(r.transpose_residual < 1e-9);
  CHECK(r.takagi_residual < 1e-9);

  for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
    const BuiltGroup p = build_group_ex("pgl2:3");
    const Built b = build(p.group, seed);
    const Prop2Report t = verify_prop2(transpose_antimorphism(*p.pgl2), b.basis, b.table, seed);
    CHECK(t.hypotheses_hold);
    CHECK(t.distance_aligned < 1e-9);
  }
}

TEST_CASE("unmet hypotheses are reported") {
  const Built c4 = build(build_group("cyclic:4"));
  const Prop2Report r = verify_prop2(inversion_antimorphism(c4.group), c4.basis, c4.table, 0);
  CHECK_FALSE(r.hypotheses_hold);
  CHECK(r.fixed_points == 2);
  CHECK(r.degree_sum == 4);
  CHECK(r.trace_L_star == 2);
  CHECK(r.trace_matches_counting);

  const Built q8 = build(oracle::quaternion_group());
  const Prop2Report s = verify_prop2(inversion_antimorphism(q8.group), q8.basis, q8.table, 0);
  CHECK(s.characters_invariant);
  CHECK_FALSE(s.hypotheses_hold);

  const Built c1 = build(build_group("cyclic:1"));
  const Prop2Report t = verify_prop2(inversion_antimorphism(c1.group), c1.basis, c1.table, 0);
  CHECK(t.hypotheses_hold);
  CHECK(t.distance_aligned == 0.0);
}

TEST_CASE("operator cap") {
  const FiniteGroup s5 = build_group("sym:5");
  CHECK_THROWS_AS(RegularSpace{s5}, CapExceeded);
  CHECK_NOTHROW(RegularSpace{s5, 128});
}
