#include <doctest.h>

#include "oracles.hpp"
#include "twistrace/descriptor.hpp"
#include "twistrace/twisted_trace.hpp"

using namespace twistrace;

namespace {

struct Case {
  std::string descriptor;
  bool transpose = false;
};

Antimorphism make(const BuiltGroup& b, bool transpose) {
  return transpose ? transpose_antimorphism(*b.pgl2) : inversion_antimorphism(b.group);
}

}  // namespace

TEST_CASE("counting function matches the double loop") {
  for (const Case& c : std::vector<Case>{{"cyclic:5"}, {"dihedral:4"}, {"dihedral:7"}, {"sym:4"}, {"pgl2:3"},
                                          {"pgl2:3", true}, {"pgl2:5", true}}) {
    CAPTURE(c.descriptor);
    const BuiltGroup b = build_group_ex(c.descriptor);
    const Antimorphism l = make(b, c.transpose);
    const CountingFunction n = counting_function(l, make_class_space(b.group));
    CHECK(n.per_element == oracle::counting(b.group, l));
    CHECK(n.total == static_cast<long long>(b.group.order()));
  }
  const FiniteGroup q8 = oracle::quaternion_group();
  const Antimorphism l = inversion_antimorphism(q8);
  CHECK(counting_function(l, make_class_space(q8)).per_element == oracle::counting(q8, l));
}

TEST_CASE("inversion counts square roots of the inverse") {
  const FiniteGroup s3 = build_group("sym:3");
  const auto space = make_class_space(s3);
  CHECK(to_integers(counting_function(inversion_antimorphism(s3), space).by_class) == std::vector<long long>{4, 0, 1});
  const FiniteGroup c3 = build_group("cyclic:3");
  const CountingFunction n = counting_function(inversion_antimorphism(c3), make_class_space(c3));
  CHECK(n.per_element == std::vector<long long>{1, 1, 1});
  CHECK(symmetry_check(n.by_class, make_class_space(c3)->classes).holds);
}

TEST_CASE("identity map on an abelian group gives the regular character") {
  const FiniteGroup c6 = build_group("cyclic:6");
  std::vector<Element> id(6);
  for (Element x = 0; x < 6; ++x) id[x] = x;
  const Antimorphism l = check_antimorphism(c6, id, "identity");
  CHECK(counting_function(l, make_class_space(c6)).per_element == std::vector<long long>{6, 0, 0, 0, 0, 0});
  const TwistReport r = analyze(l, character_table(c6));
  CHECK(r.fixed_points == 6);
  CHECK(r.gelfand_model);
}

TEST_CASE("coefficient paths on real groups") {
  for (const char* d : {"sym:3", "sym:4", "sym:5", "dihedral:4", "dihedral:5"}) {
    CAPTURE(d);
    const FiniteGroup g = build_group(d);
    const CharacterTable t = character_table(g);
    const TwistReport r = analyze(inversion_antimorphism(g), t);
    CHECK(r.all_invariant());
    CHECK(r.epsilon == std::vector<long long>(t.size(), 1));
    CHECK(r.gelfand_model);
    CHECK(r.fixed_points == static_cast<std::size_t>(r.degree_sum));
    CHECK(r.path_discrepancy <= 1e-8);
    CHECK(r.distance_to_gelfand < 1e-9);
    const auto roots = oracle::square_roots(g);
    for (std::size_t j = 0; j < t.num_classes(); ++j)
      CHECK(to_integers(r.counting)[j] == roots[t.space->classes.reps[j]]);
  }
  CHECK(analyze(inversion_antimorphism(build_group("sym:3")), character_table(build_group("sym:3"))).fixed_points == 4);
  CHECK(analyze(inversion_antimorphism(build_group("sym:4")), character_table(build_group("sym:4"))).fixed_points == 10);
  CHECK(analyze(inversion_antimorphism(build_group("dihedral:4")), character_table(build_group("dihedral:4")))
            .fixed_points == 6);
}

TEST_CASE("quaternion inversion has a symplectic character") {
  const FiniteGroup q8 = oracle::quaternion_group();
  const CharacterTable t = character_table(q8);
  const TwistReport r = analyze(inversion_antimorphism(q8), t);
  CHECK(r.all_invariant());
  CHECK(r.epsilon == std::vector<long long>{1, 1, 1, 1, -1});
  CHECK(r.fixed_points == 2);  // +-1
  CHECK(r.degree_sum == 6);
  CHECK_FALSE(r.gelfand_model);
  CHECK(std::abs(r.c_tau[4] + 1.0) < 1e-10);
}

TEST_CASE("non-invariant characters are flagged, not asserted") {
  const FiniteGroup c4 = build_group("cyclic:4");
  const CharacterTable t = character_table(c4);
  const TwistReport r = analyze(inversion_antimorphism(c4), t);
  CHECK(r.fixed_points == 2);
  CHECK(r.degree_sum == 4);
  CHECK_FALSE(r.gelfand_model);
  CHECK(std::count(r.chi_L_invariant.begin(), r.chi_L_invariant.end(), false) == 2);
  for (std::size_t k = 0; k < t.size(); ++k)
    if (!r.chi_L_invariant[k]) CHECK(r.epsilon[k] == 0);

  const FiniteGroup c3 = build_group("cyclic:3");
  const CharacterTable t3 = character_table(c3);
  const auto c = twisted_fs_indicator(t3, inversion_antimorphism(c3));
  const auto inv = chi_L_invariance(t3, inversion_antimorphism(c3), 1e-8);
  CHECK(inv == std::vector<bool>{true, false, false});
  CHECK(std::abs(c[1]) < 1e-12);
  CHECK(std::abs(c[2]) < 1e-12);
}

TEST_CASE("transpose on pgl2") {
  for (const char* d : {"pgl2:3", "pgl2:5", "pgl2:7"}) {
    CAPTURE(d);
    const BuiltGroup b = build_group_ex(d);
    const CharacterTable t = character_table(b.group);
    const TwistReport r = analyze(transpose_antimorphism(*b.pgl2), t);
    CHECK(r.all_invariant());
    CHECK(r.symmetric);
    CHECK(r.epsilon == std::vector<long long>(t.size(), 1));
    CHECK(r.fixed_points == static_cast<std::size_t>(r.degree_sum));
  }
}

TEST_CASE("elementary identities on every pair") {
  for (const Case& c : std::vector<Case>{{"cyclic:7"}, {"cyclic:8"}, {"dihedral:3"}, {"dihedral:6"}, {"sym:4"},
                                          {"pgl2:3"}, {"pgl2:3", true}, {"pgl2:5"}}) {
    CAPTURE(c.descriptor);
    const BuiltGroup b = build_group_ex(c.descriptor);
    const CharacterTable t = character_table(b.group);
    const TwistReport r = analyze(make(b, c.transpose), t);
    long long expansion = 0;
    for (std::size_t k = 0; k < t.size(); ++k) expansion += r.epsilon[k] * t.degrees[k];
    CHECK(expansion == static_cast<long long>(r.fixed_points));
    CHECK(r.symmetric);
    CHECK(r.counting_total == static_cast<long long>(b.group.order()));
    const bool all_one = std::all_of(r.epsilon.begin(), r.epsilon.end(), [](long long e) { return e == 1; });
    CHECK(r.gelfand_model == all_one);
    CHECK(r.path_discrepancy <= 1e-8);
  }
}

TEST_CASE("mismatched inputs are rejected") {
  const FiniteGroup s3 = build_group("sym:3");
  const CharacterTable t4 = character_table(build_group("cyclic:4"));
  CHECK_THROWS_AS(analyze(inversion_antimorphism(s3), t4), GroupMismatch);
}
