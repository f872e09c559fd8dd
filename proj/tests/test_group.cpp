#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "oracles.hpp"
#include "twistrace/class_function.hpp"
#include "twistrace/descriptor.hpp"

using namespace twistrace;

namespace {

std::set<std::vector<Element>> library_classes(const FiniteGroup& g) {
  const ClassData cd = conjugacy_classes(g);
  std::set<std::vector<Element>> out;
  for (std::size_t j = 0; j < cd.num_classes(); ++j) out.insert(class_members(cd, j));
  return out;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = "twistrace_test_" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("descriptors build groups of the advertised order") {
  CHECK(build_group("cyclic:1").order() == 1);
  CHECK(build_group("cyclic:7").order() == 7);
  CHECK(build_group("dihedral:4").order() == 8);
  CHECK(build_group("sym:4").order() == 24);
  CHECK(build_group("pgl2:3").order() == 24);
  CHECK(build_group("pgl2:5").order() == 120);
}

TEST_CASE("malformed descriptors and caps are rejected") {
  CHECK_THROWS_AS(build_group("cyclic:0"), DescriptorError);
  CHECK_THROWS_AS(build_group("cyclic"), DescriptorError);
  CHECK_THROWS_AS(build_group("alt:5"), DescriptorError);
  CHECK_THROWS_AS(build_group("cyclic:x"), DescriptorError);
  CHECK_THROWS_AS(build_group("pgl2:4"), DescriptorError);
  CHECK_THROWS_AS(build_group("pgl2:6"), DescriptorError);
  CHECK_THROWS_AS(build_group("table:/nonexistent/file.json"), Error);
  CHECK_THROWS_AS(build_group("sym:8"), CapExceeded);
  CHECK_THROWS_AS(build_group("cyclic:20", 10), CapExceeded);
  CHECK(build_group("sym:8", 50000).order() == 40320);
}

TEST_CASE("group axioms hold for every family") {
  for (const char* d : {"cyclic:1", "cyclic:9", "dihedral:1", "dihedral:5", "sym:1", "sym:4", "pgl2:3", "pgl2:5"}) {
    CAPTURE(d);
    CHECK_FALSE(check_group_axioms(build_group(d)).has_value());
  }
}

TEST_CASE("element orderings are reproducible") {
  const FiniteGroup a = build_group("sym:4"), b = build_group("sym:4");
  for (Element x = 0; x < 24; ++x)
    for (Element y = 0; y < 24; ++y) REQUIRE(a.mul(x, y) == b.mul(x, y));
  for (std::size_t r = 0; r < 120; ++r) CHECK(rank_of(permutation_of(5, r)) == r);
}

TEST_CASE("conjugacy classes match the brute-force partition") {
  for (const char* d : {"cyclic:6", "dihedral:4", "dihedral:5", "sym:3", "sym:4", "pgl2:3", "pgl2:5"}) {
    CAPTURE(d);
    const FiniteGroup g = build_group(d);
    CHECK(library_classes(g) == oracle::classes(g));
  }
  CHECK(library_classes(oracle::quaternion_group()) == oracle::classes(oracle::quaternion_group()));
}

TEST_CASE("class data invariants") {
  for (const char* d : {"cyclic:4", "dihedral:4", "sym:4", "sym:5", "pgl2:5"}) {
    CAPTURE(d);
    const FiniteGroup g = build_group(d);
    const ClassData cd = conjugacy_classes(g);
    std::size_t total = 0;
    CHECK(cd.reps[0] == g.identity());
    for (std::size_t j = 0; j < cd.num_classes(); ++j) {
      total += cd.sizes[j];
      CHECK(cd.sizes[j] * cd.centralizer_orders[j] == g.order());
      CHECK(cd.class_of[cd.reps[j]] == j);
      CHECK(cd.class_of[g.inv(cd.reps[j])] == cd.inverse_class[j]);
      const auto members = class_members(cd, j);
      CHECK(members.front() == cd.reps[j]);
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("class order examples") {
  CHECK(conjugacy_classes(build_group("cyclic:4")).sizes == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(conjugacy_classes(build_group("sym:3")).sizes == std::vector<std::size_t>{1, 3, 2});
  const ClassData s4 = conjugacy_classes(build_group("sym:4"));
  CHECK(s4.sizes == std::vector<std::size_t>{1, 6, 3, 8, 6});
  CHECK(s4.element_orders == std::vector<std::size_t>{1, 2, 2, 3, 4});
  CHECK(conjugacy_classes(build_group("pgl2:3")).sizes == std::vector<std::size_t>{1, 6, 3, 8, 6});
}

TEST_CASE("table descriptor round trip and validation") {
  const FiniteGroup c3 = build_group("cyclic:3");
  std::string body = "{\"order\": 3, \"mul\": [";
  for (Element x = 0; x < 3; ++x)
    for (Element y = 0; y < 3; ++y) body += std::to_string(c3.mul(x, y)) + (x == 2 && y == 2 ? "" : ",");
  body += "], \"labels\": [\"e\", \"a\", \"b\"]}";
  const FiniteGroup t = build_group("table:" + write_temp("c3.json", body));
  CHECK(t.order() == 3);
  CHECK(t.element_labels()[1] == "a");
  CHECK(t.mul(1, 2) == 0);

  // Not associative: a Latin square that is not a group.
  const std::string bad = "{\"order\": 5, \"mul\": [0,1,2,3,4, 1,0,3,4,2, 2,4,0,1,3, 3,2,4,0,1, 4,3,1,2,0]}";
  CHECK_THROWS_AS(build_group("table:" + write_temp("bad.json", bad)), DescriptorError);
  CHECK_THROWS_AS(build_group("table:" + write_temp("short.json", "{\"order\": 2, \"mul\": [0,1,1]}")),
                  DescriptorError);
  CHECK_THROWS_AS(build_group("table:" + write_temp("junk.json", "not json")), DescriptorError);
}

TEST_CASE("antimorphism validation names the failed axiom") {
  const FiniteGroup s3 = build_group("sym:3");
  std::vector<Element> inv(6), ident(6), constant(6, 0);
  for (Element x = 0; x < 6; ++x) {
    inv[x] = s3.inv(x);
    ident[x] = x;
  }
  CHECK(check_antimorphism(s3, inv).fixed_point_count() == 4);

  auto axiom_of = [&](std::vector<Element> m) {
    try {
      check_antimorphism(s3, std::move(m));
    } catch (const AntimorphismRejected& e) {
      return std::string(to_string(e.axiom()));
    }
    return std::string("accepted");
  };
  CHECK(axiom_of(constant) == "not-bijective");
  CHECK(axiom_of(ident) == "not-anti");  // sym:3 is not abelian

  // On an abelian group every automorphism is an antiautomorphism; doubling
  // on cyclic:5 is one but is not involutive.
  const FiniteGroup c5 = build_group("cyclic:5");
  std::vector<Element> doubling(5);
  for (Element x = 0; x < 5; ++x) doubling[x] = (2 * x) % 5;
  try {
    check_antimorphism(c5, doubling);
    FAIL("doubling accepted");
  } catch (const AntimorphismRejected& e) {
    CHECK(e.axiom() == AntimorphismAxiom::kInvolution);
  }

  const FiniteGroup c2 = build_group("cyclic:2");
  CHECK(inversion_antimorphism(c2).fixed_point_count() == 2);
}

TEST_CASE("transpose on pgl2:3 is an involutive antiautomorphism") {
  const BuiltGroup b = build_group_ex("pgl2:3");
  const Antimorphism t = transpose_antimorphism(*b.pgl2);
  for (Element x = 0; x < 24; ++x)
    for (Element y = 0; y < 24; ++y) REQUIRE(t(b.group.mul(x, y)) == b.group.mul(t(y), t(x)));
  CHECK(t.fixed_point_count() == 10);
}

TEST_CASE("antimorphism tables load from JSON") {
  const FiniteGroup s3 = build_group("sym:3");
  std::string body = "{\"map\": [";
  for (Element x = 0; x < 6; ++x) body += std::to_string(s3.inv(x)) + (x == 5 ? "]}" : ",");
  CHECK(load_antimorphism(s3, write_temp("inv.json", body)).fixed_point_count() == 4);
  CHECK_THROWS_AS(load_antimorphism(s3, write_temp("short_map.json", "{\"map\": [0, 1]}")), Error);
}
