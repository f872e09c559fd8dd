#include "twistrace/report_json.hpp"

#include <cstdio>
#include <limits>

namespace twistrace {

namespace {

// Avoids "-0.0" in output when a value is an exact zero of either sign.
double clean(double x) { return x == 0.0 ? 0.0 : x; }

Json classes_json(const ClassData& cd) {
  Json out = Json::array();
  for (std::size_t j = 0; j < cd.num_classes(); ++j)
    out.push_back({{"rep", cd.reps[j]}, {"size", cd.sizes[j]}});
  return out;
}

Json complex_list(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (const Complex& z : v) out.push_back(complex_json(z));
  return out;
}

Json int_values(const ClassFunction& f) { return to_integers(f); }

Json pair_json(const std::optional<ClassPair>& p) {
  if (!p) return nullptr;
  return Json::array({p->first, p->second});
}

Json int_vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const BigInt& x : v) out.push_back(bigint_json(x));
  return out;
}

Json solutions_json(const StPolynomialSolutions& s, bool with_sgn) {
  Json unknowns = Json::array();
  for (std::size_t i = s.max_degree + 1; i-- > 0;) {
    unknowns.push_back("a_" + std::to_string(i));
    if (with_sgn) unknowns.push_back("b_" + std::to_string(i));
  }
  Json kernel = Json::array();
  for (const auto& k : s.set.kernel_basis) kernel.push_back(int_vector_json(k));
  return {{"max_degree", s.max_degree},
          {"unknowns", unknowns},
          {"nonempty", !s.set.empty()},
          {"particular", s.set.particular ? int_vector_json(*s.set.particular) : Json(nullptr)},
          {"kernel_basis", kernel}};
}

}  // namespace

Json complex_json(Complex z) { return {{"re", clean(z.real())}, {"im", clean(z.imag())}}; }

Json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

std::string format_tolerance(double tol) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", tol);
  return buf;
}

Json table_json(const CharacterTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) rows.push_back(complex_list(row.values));
  return {{"group", t.space->group},
          {"classes", classes_json(t.space->classes)},
          {"degrees", t.degrees},
          {"rows", rows}};
}

CharacterTable table_from_json(const Json& doc, std::shared_ptr<const ClassSpace> space) {
  try {
    if (doc.at("group").get<std::string>() != space->group) throw Error("cached table names another group");
    const auto& cd = space->classes;
    const Json& classes = doc.at("classes");
    if (classes.size() != cd.num_classes()) throw Error("cached table has a different class count");
    for (std::size_t j = 0; j < cd.num_classes(); ++j)
      if (classes[j].at("rep").get<Element>() != cd.reps[j] || classes[j].at("size").get<std::size_t>() != cd.sizes[j])
        throw Error("cached table has different classes");
    CharacterTable t;
    t.space = space;
    t.degrees = doc.at("degrees").get<std::vector<long long>>();
    const Json& rows = doc.at("rows");
    if (rows.size() != cd.num_classes() || t.degrees.size() != cd.num_classes())
      throw Error("cached table is not square");
    for (const Json& row : rows) {
      if (row.size() != cd.num_classes()) throw Error("cached table row has the wrong length");
      ClassFunction f{space, {}};
      for (const Json& z : row) f.values.emplace_back(z.at("re").get<double>(), z.at("im").get<double>());
      t.rows.push_back(std::move(f));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed table document: ") + e.what());
  }
}

Json twist_json(const TwistReport& r, const CharacterTable& t) {
  Json chars = Json::array();
  for (std::size_t k = 0; k < t.size(); ++k)
    chars.push_back({{"degree", t.degrees[k]},
                     {"lambda_fourier", complex_json(r.lambda_fourier[k])},
                     {"lambda_average", complex_json(r.lambda_average[k])},
                     {"c_tau", complex_json(r.c_tau[k])},
                     {"L_invariant", static_cast<bool>(r.chi_L_invariant[k])},
                     {"epsilon", r.epsilon[k]}});
  Json witness = nullptr;
  if (r.noncentral_witness) witness = Json::array({r.noncentral_witness->first, r.noncentral_witness->second});
  return {{"antimorphism", r.antimorphism},
          {"classes", classes_json(t.space->classes)},
          {"counting", int_values(r.counting)},
          {"gelfand_character", int_values(gelfand_character(t))},
          {"characters", chars},
          {"fixed_points", r.fixed_points},
          {"degree_sum", r.degree_sum},
          {"gelfand_model", r.gelfand_model},
          {"all_invariant", r.all_invariant()},
          {"counting_total", r.counting_total},
          {"counting_central", r.counting_central},
          {"noncentral_witness", witness},
          {"symmetric", r.symmetric},
          {"asymmetric_class", r.asymmetric_class ? Json(*r.asymmetric_class) : Json(nullptr)},
          {"path_discrepancy", r.path_discrepancy},
          {"distance_to_gelfand", r.distance_to_gelfand}};
}

Json theorem1_json(const Theorem1Report& r, double tol) {
  const IrrepCheck& i = r.irreps;
  return {{"intertwining", r.intertwining},
          {"commuting", r.commuting},
          {"homomorphism", r.homomorphism},
          {"trace", r.trace},
          {"involution", r.involution},
          {"irreps",
           {{"unitarity", i.unitarity},
            {"homomorphism", i.homomorphism},
            {"character", i.character},
            {"conjugate_transpose", i.conjugate_transpose},
            {"schur", i.schur}}},
          {"traces_by_class", complex_list(r.traces_by_class)},
          {"max_residual", r.max()},
          {"passed", r.passed(tol)}};
}

Json prop2_json(const Prop2Report& r, double tol) {
  Json out = {{"characters_invariant", r.characters_invariant},
              {"fixed_points", r.fixed_points},
              {"degree_sum", r.degree_sum},
              {"hypotheses_hold", r.hypotheses_hold},
              {"failed_hypothesis", r.hypotheses_hold ? Json(nullptr) : Json(r.failed_hypothesis)},
              {"trace_L_star", r.trace_L_star},
              {"trace_matches_counting", r.trace_matches_counting},
              {"intertwining_exact", r.intertwining_exact},
              {"commuting_exact", r.commuting_exact}};
  if (r.hypotheses_hold) {
    out["distance_unaligned"] = r.distance_unaligned;
    out["distance_aligned"] = r.distance_aligned;
    out["transpose_residual"] = r.transpose_residual;
    out["takagi_residual"] = r.takagi_residual;
    out["symmetry_residual"] = r.symmetry_residual;
    out["passed"] = r.distance_aligned <= tol && r.transpose_residual <= tol;
  }
  return out;
}

Json pgl2_json(const Pgl2Report& r, const Pgl2& g) {
  const auto& cd = r.st.space->classes;
  const auto st = to_integers(r.st), sgn = to_integers(r.sgn), ind = to_integers(r.ind_t),
             gel = to_integers(r.gelfand);
  const FiniteField& f = g.field();
  Json classes = Json::array();
  for (std::size_t j : r.class_order) {
    const ProjMatrix& m = g.matrix(cd.reps[j]);
    Json c = {{"class", j},
              {"kind", to_string(r.kinds[j])},
              {"rep", cd.reps[j]},
              {"rep_matrix", Json::array({Json::array({f.to_string(m.a), f.to_string(m.b)}),
                                          Json::array({f.to_string(m.c), f.to_string(m.d)})})},
              {"size", cd.sizes[j]},
              {"element_order", cd.element_orders[j]},
              {"St", st[j]},
              {"sgn", sgn[j]},
              {"ind_T", ind[j]},
              {"chi_G", gel[j]},
              {"St_squared", r.ap.st_squared[j]},
              {"ap_residual", r.ap.residual[j]}};
    if (!r.stated_values.empty()) c["St2_plus_St_plus_sgn"] = r.stated_values[j];
    classes.push_back(std::move(c));
  }
  Json sgn_w = Json::array(), gel_w = Json::array();
  for (const auto& p : r.sgn_witnesses) sgn_w.push_back(Json::array({p.first, p.second}));
  for (const auto& p : r.gelfand_witnesses) gel_w.push_back(Json::array({p.first, p.second}));
  Json solver = solutions_json(r.solutions, true);
  solver["stated_tuple"] = r.stated_tuple.empty() ? Json(nullptr) : int_vector_json(r.stated_tuple);
  solver["stated_tuple_in_set"] = r.stated_tuple_in_set;
  solver["computed_tuple"] = r.computed_tuple.empty() ? Json(nullptr) : int_vector_json(r.computed_tuple);
  solver["computed_tuple_in_set"] = r.computed_tuple_in_set;
  Json st_only = solutions_json(r.st_only, false);
  st_only["chi_G_in_Z_St"] = !r.st_only.set.empty();
  return {{"q", r.q},
          {"field_modulus", r.modulus},
          {"order", r.order},
          {"classes", classes},
          {"torus", r.torus},
          {"ap_identity", {{"holds", r.ap.holds()}, {"witness_class", r.ap.witness_class ? Json(*r.ap.witness_class) : Json(nullptr)}}},
          {"solver", solver},
          {"solver_St_only", st_only},
          {"corollary_witness", pair_json(r.corollary_witness)},
          {"sgn_witnesses", sgn_w},
          {"chi_G_witnesses", gel_w},
          {"identities_hold", r.identities_hold()}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace twistrace
