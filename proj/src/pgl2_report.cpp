#include "twistrace/pgl2_report.hpp"

#include <cmath>

namespace twistrace {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw NumericalError(what);
}

}  // namespace

IntVector st_polynomial_tuple(std::size_t max_degree,
                              const std::vector<std::pair<std::size_t, std::pair<int, int>>>& terms) {
  IntVector out(2 * (max_degree + 1), 0);
  for (const auto& [degree, ab] : terms) {
    if (degree > max_degree) return {};
    const std::size_t at = 2 * (max_degree - degree);
    out[at] = ab.first;
    out[at + 1] = ab.second;
  }
  return out;
}

std::vector<long long> evaluate_st_polynomial(const IntVector& tuple, const ClassFunction& st,
                                              const ClassFunction& sgn) {
  const auto s = to_integers(st);
  const auto e = to_integers(sgn);
  const std::size_t max_degree = tuple.size() / 2 - 1;
  std::vector<long long> out(s.size(), 0);
  for (std::size_t j = 0; j < s.size(); ++j) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= max_degree; ++i) {
      BigInt power = 1;
      for (std::size_t p = 0; p < i; ++p) power *= s[j];
      const std::size_t at = 2 * (max_degree - i);
      acc += (tuple[at] + tuple[at + 1] * e[j]) * power;
    }
    out[j] = acc.convert_to<long long>();
  }
  return out;
}

Pgl2Report analyze_pgl2(const Pgl2& g, const CharacterTable& t, std::size_t max_degree) {
  const FiniteGroup& group = g.group();
  if (t.space->group != group.label()) throw GroupMismatch("table does not belong to " + group.label());
  const auto& space = t.space;
  const auto& cd = space->classes;
  const long long q = g.q();

  Pgl2Report rep;
  rep.q = g.q();
  rep.modulus = g.field().modulus();
  rep.order = group.order();
  rep.class_order = report_class_order(g, cd);
  rep.kinds = class_kinds(g, cd);

  rep.st = steinberg_character(g, space);
  rep.sgn = sign_character(g, space);
  rep.gelfand = gelfand_character(t);
  rep.torus = coxeter_torus(g);
  const std::vector<Complex> ones(rep.torus.size(), 1.0);
  rep.ind_t = induced_character(group, space, rep.torus, ones);

  const ClassFunction one = trivial_character(space);
  require(to_integers(rep.st)[0] == q, "St(e) != q");
  require(std::abs(inner_product(rep.st, rep.st) - 1.0) < kIntegralSlack, "<St, St> != 1");
  require(std::abs(inner_product(rep.st, one)) < kIntegralSlack, "<St, 1> != 0");
  require(max_distance(rep.sgn * rep.sgn, one) < kIntegralSlack, "sgn^2 != 1");
  require(max_distance(rep.sgn, one) > kIntegralSlack, "sgn is trivial");
  bool sgn_moves_on_torus = false;
  for (Element x : rep.torus) sgn_moves_on_torus |= rep.sgn[cd.class_of[x]].real() < 0;
  require(sgn_moves_on_torus, "sgn is trivial on the Coxeter torus");
  require(to_integers(rep.ind_t)[0] == q * q - q, "Ind_T 1 (e) != q^2 - q");
  require(cd.num_classes() == static_cast<std::size_t>(q + 2), "class count != q + 2");

  rep.ap = verify_ap_identity(rep.st, rep.ind_t);
  rep.solutions = solve_polynomial_in_st(rep.st, rep.sgn, rep.gelfand, max_degree);
  rep.st_only = solve_polynomial_in_st_only(rep.st, rep.gelfand, max_degree);

  rep.stated_tuple = st_polynomial_tuple(max_degree, {{2, {1, 0}}, {1, {1, 0}}, {0, {0, 1}}});
  rep.computed_tuple = st_polynomial_tuple(max_degree, {{2, {1, 0}}, {0, {0, 1}}});
  if (!rep.stated_tuple.empty()) {
    rep.stated_tuple_in_set = rep.solutions.contains(rep.stated_tuple);
    rep.stated_values = evaluate_st_polynomial(rep.stated_tuple, rep.st, rep.sgn);
  }
  if (!rep.computed_tuple.empty()) rep.computed_tuple_in_set = rep.solutions.contains(rep.computed_tuple);

  rep.corollary_witness = corollary_witness(rep.st, rep.sgn);
  rep.sgn_witnesses = all_separation_witnesses(rep.st, rep.sgn);
  rep.gelfand_witnesses = all_separation_witnesses(rep.st, rep.gelfand);
  return rep;
}

}  // namespace twistrace
