#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "twistrace/descriptor.hpp"
#include "twistrace/matrix_coeffs.hpp"
#include "twistrace/pgl2_report.hpp"
#include "twistrace/report_json.hpp"
#include "twistrace/table_cache.hpp"
#include "twistrace/twisted_trace.hpp"

using namespace twistrace;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitIdentity = 2;

struct RunConfig {
  std::string command;
  std::string descriptor;
  std::string antimorphism = "inversion";
  std::uint64_t seed = 0;
  double tol = kDefaultTolerance;
  std::string json_path;
  std::optional<std::string> cache_dir;
  std::optional<std::size_t> cap;
  std::size_t max_degree = 2;
  std::uint32_t q = 0;
};

std::string fmt_complex(Complex z) {
  auto clean = [](double x) { return std::abs(x) < 5e-7 ? 0.0 : x; };
  const double re = clean(z.real()), im = clean(z.imag());
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << re;
  if (im != 0) os << (im < 0 ? "-" : "+") << std::abs(im) << "i";
  return os.str();
}

std::string fmt_real(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << x;
  return os.str();
}

Json header(const RunConfig& c) {
  return {{"command", c.command}, {"group", c.descriptor}, {"seed", c.seed}, {"tol", c.tol}};
}

void emit_json(const RunConfig& c, const Json& doc) {
  if (c.json_path.empty()) return;
  std::ofstream out(c.json_path, std::ios::binary);
  out << dump(doc);
  if (!out) throw Error("cannot write " + c.json_path);
}

struct Loaded {
  BuiltGroup built;
  std::shared_ptr<const ClassSpace> space;
  CharacterTable table;
};

Loaded load(const RunConfig& c, std::size_t order_cap) {
  Loaded l{build_group_ex(c.descriptor, order_cap), nullptr, {}};
  l.space = make_class_space(l.built.group);
  TableCache cache(resolve_cache_dir(c.cache_dir));
  CacheOutcome outcome;
  l.table = cache.get(c.descriptor, l.built.group, l.space, c.seed, c.tol, &outcome);
  std::cerr << "cache " << to_string(outcome) << ": " << cache.entry(c.descriptor, c.seed, c.tol).string() << "\n";
  return l;
}

void print_classes(const ClassData& cd) {
  std::cout << "classes  ";
  for (std::size_t j = 0; j < cd.num_classes(); ++j)
    std::cout << " [" << j << "] rep " << cd.reps[j] << " size " << cd.sizes[j] << (j + 1 < cd.num_classes() ? "," : "");
  std::cout << "\n";
}

int cmd_chartab(const RunConfig& c) {
  const Loaded l = load(c, c.cap.value_or(kDefaultOrderCap));
  const CharacterTable& t = l.table;
  const TableResiduals res = table_residuals(t);
  long long squares = 0;
  for (long long n : t.degrees) squares += n * n;

  Json doc = header(c);
  doc.update(table_json(t));
  doc["sum_of_squares"] = squares;
  doc["residuals"] = {{"row", res.row}, {"column", res.column}, {"conjugation", res.conjugation}};
  emit_json(c, doc);

  std::cout << "group " << c.descriptor << "  order " << l.built.group.order() << "  classes " << t.num_classes()
            << "  sum n_k^2 = " << squares << "\n";
  print_classes(l.space->classes);
  for (std::size_t k = 0; k < t.size(); ++k) {
    std::cout << "chi_" << std::left << std::setw(3) << k << std::right;
    for (const Complex& z : t.rows[k].values) std::cout << std::setw(22) << fmt_complex(z);
    std::cout << "\n";
  }
  std::cout << "residuals row " << fmt_real(res.row) << "  column " << fmt_real(res.column) << "  conjugation "
            << fmt_real(res.conjugation) << "\n";
  return kExitOk;
}

Antimorphism select_antimorphism(const std::string& sel, const BuiltGroup& b) {
  if (sel == "inversion") return inversion_antimorphism(b.group);
  if (sel == "transpose") {
    if (!b.pgl2) throw DescriptorError("transpose is only defined for pgl2:<q>");
    return transpose_antimorphism(*b.pgl2);
  }
  if (sel.rfind("table:", 0) == 0) return load_antimorphism(b.group, sel.substr(6));
  throw DescriptorError("unknown antimorphism '" + sel + "' (inversion | transpose | table:<path>)");
}

int cmd_twist(const RunConfig& c) {
  const Loaded l = load(c, c.cap.value_or(kDefaultOrderCap));
  const CharacterTable& t = l.table;
  const Antimorphism a = select_antimorphism(c.antimorphism, l.built);
  const TwistReport r = analyze(a, t, c.tol);

  // Claims that hold whenever the inputs are valid: N_L(g) = N_L(g^-1); N_L is
  // a class function when every character is L-invariant; N_L = chi_G when the
  // fixed-point criterion holds.
  std::vector<std::string> failed;
  if (!r.symmetric) failed.push_back("N_L(C) != N_L(C^-1)");
  if (r.all_invariant() && !r.counting_central) failed.push_back("N_L is not a class function");
  if (r.gelfand_model && to_integers(r.counting) != to_integers(gelfand_character(t)))
    failed.push_back("N_L != chi_G although fixed points = sum n_k");

  Json doc = header(c);
  doc.update(twist_json(r, t));
  doc["failed_identities"] = failed;
  emit_json(c, doc);

  std::cout << "group " << c.descriptor << "  L = " << r.antimorphism << "\n";
  print_classes(l.space->classes);
  std::cout << "N_L      ";
  for (long long v : to_integers(r.counting)) std::cout << " " << v;
  std::cout << "\nchi_G    ";
  for (long long v : to_integers(gelfand_character(t))) std::cout << " " << v;
  std::cout << "\n\n"
            << std::left << std::setw(6) << "k" << std::setw(8) << "degree" << std::setw(22) << "lambda_fourier"
            << std::setw(22) << "lambda_average" << std::setw(22) << "c_tau" << "L-invariant\n";
  for (std::size_t k = 0; k < t.size(); ++k)
    std::cout << std::setw(6) << k << std::setw(8) << t.degrees[k] << std::setw(22) << fmt_complex(r.lambda_fourier[k])
              << std::setw(22) << fmt_complex(r.lambda_average[k]) << std::setw(22) << fmt_complex(r.c_tau[k])
              << (r.chi_L_invariant[k] ? "yes" : "no") << "\n";
  std::cout << std::right << "\nfixed points " << r.fixed_points << "  degree sum " << r.degree_sum
            << "  gelfand model " << (r.gelfand_model ? "true" : "false") << "  path discrepancy "
            << fmt_real(r.path_discrepancy) << "\n";
  for (const auto& f : failed) std::cout << "FAILED: " << f << "\n";
  return failed.empty() ? kExitOk : kExitIdentity;
}

int cmd_theorem1(const RunConfig& c) {
  const std::size_t op_cap = c.cap.value_or(kDefaultOperatorCap);
  const Loaded l = load(c, std::max(op_cap, kDefaultOrderCap));
  const CharacterTable& t = l.table;
  const RegularSpace reg(l.built.group, op_cap);
  const auto projectors = isotypic_projectors(t, reg);
  const ProjectorCheck pc = check_projectors(projectors, t);
  const MatrixCoeffBasis basis = extract_irreps(projectors, reg, t, c.seed);
  const Operator t_op = build_T(basis);
  const Theorem1Report thm = verify_theorem1(basis, t_op, t);
  const Antimorphism a = select_antimorphism(c.antimorphism, l.built);
  const Prop2Report p2 = verify_prop2(a, basis, t, c.seed, c.tol);

  const bool projectors_ok = pc.max() <= c.tol;
  const bool exact_ok = p2.trace_matches_counting && p2.intertwining_exact && p2.commuting_exact &&
                        p2.trace_L_star == static_cast<long long>(p2.fixed_points);
  const bool prop2_ok = !p2.hypotheses_hold || (p2.distance_aligned <= c.tol && p2.transpose_residual <= c.tol);

  Json doc = header(c);
  doc["antimorphism"] = a.name();
  doc["projectors"] = {{"idempotence", pc.idempotence},
                       {"orthogonality", pc.orthogonality},
                       {"completeness", pc.completeness},
                       {"rank", pc.rank},
                       {"passed", projectors_ok}};
  doc["theorem1"] = theorem1_json(thm, c.tol);
  doc["prop2"] = prop2_json(p2, c.tol);
  doc["passed"] = projectors_ok && thm.passed(c.tol) && exact_ok && prop2_ok;
  emit_json(c, doc);

  std::cout << "group " << c.descriptor << "  order " << l.built.group.order() << "  L = " << a.name() << "\n\n"
            << std::left << std::setw(44) << "check" << "residual\n";
  auto line = [](const std::string& name, double v) { std::cout << std::setw(44) << name << fmt_real(v) << "\n"; };
  line("projectors", pc.max());
  line("irreps unitary", thm.irreps.unitarity);
  line("irreps homomorphism", thm.irreps.homomorphism);
  line("irreps character", thm.irreps.character);
  line("e_ij(g^-1) = conj e_ji(g)", thm.irreps.conjugate_transpose);
  line("Schur orthogonality", thm.irreps.schur);
  line("T^2 = I", thm.involution);
  line("rho_g T = T sigma~_g", thm.intertwining);
  line("rho_g sigma~_h = sigma~_h rho_g", thm.commuting);
  line("tr(rho_g T) = chi_G(g)", thm.trace);
  std::cout << "\ntr(L*) = " << p2.trace_L_star << "  fixed points " << p2.fixed_points << "  degree sum "
            << p2.degree_sum << "\n"
            << "exact permutation identities " << (exact_ok ? "hold" : "FAIL") << "\n";
  if (p2.hypotheses_hold) {
    line("|L* - T| unaligned", p2.distance_unaligned);
    line("|L* - T| aligned", p2.distance_aligned);
    line("e_ij(L(g)) = e_ji(g) aligned", p2.transpose_residual);
  } else {
    std::cout << "operator identity L* = T not claimed: " << p2.failed_hypothesis << "\n";
  }
  std::cout << std::right;
  const bool ok = doc["passed"].get<bool>();
  std::cout << (ok ? "all checks pass" : "FAILED") << "\n";
  return ok ? kExitOk : kExitIdentity;
}

int cmd_pgl2(RunConfig c) {
  c.descriptor = "pgl2:" + std::to_string(c.q);
  const Loaded l = load(c, c.cap.value_or(kDefaultOrderCap));
  const Pgl2& g = *l.built.pgl2;
  const Pgl2Report r = analyze_pgl2(g, l.table, c.max_degree);

  Json doc = header(c);
  doc["max_degree"] = c.max_degree;
  doc.update(pgl2_json(r, g));
  emit_json(c, doc);

  const auto st = to_integers(r.st), sgn = to_integers(r.sgn), ind = to_integers(r.ind_t),
             gel = to_integers(r.gelfand);
  const auto& cd = l.space->classes;
  std::cout << "PGL(2," << r.q << ")  order " << r.order << "  classes " << cd.num_classes() << "\n\n"
            << std::setw(6) << "class" << std::setw(12) << "kind" << std::setw(6) << "size" << std::setw(7) << "St"
            << std::setw(6) << "sgn" << std::setw(8) << "Ind_T" << std::setw(8) << "chi_G" << std::setw(8) << "St^2"
            << std::setw(10) << "residual" << std::setw(16) << "St^2+St+sgn" << "\n";
  for (std::size_t j : r.class_order) {
    std::cout << std::setw(6) << j << std::setw(12) << to_string(r.kinds[j]) << std::setw(6) << cd.sizes[j]
              << std::setw(7) << st[j] << std::setw(6) << sgn[j] << std::setw(8) << ind[j] << std::setw(8) << gel[j]
              << std::setw(8) << r.ap.st_squared[j] << std::setw(10) << r.ap.residual[j] << std::setw(16);
    if (r.stated_values.empty()) std::cout << "-";
    else std::cout << r.stated_values[j];
    std::cout << "\n";
  }
  auto tuple = [](const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
  };
  std::cout << "\nSt^2 = Ind_T 1 + St: " << (r.ap.holds() ? "holds on every class" : "FAILS") << "\n";
  std::cout << "chi_G = sum_i (a_i + b_i sgn) St^i, i <= " << c.max_degree << ": ";
  if (r.solutions.set.empty()) std::cout << "no integer solution\n";
  else
    std::cout << "particular " << tuple(*r.solutions.set.particular) << ", kernel rank "
              << r.solutions.set.kernel_basis.size() << "\n";
  if (!r.computed_tuple.empty())
    std::cout << "St^2 + sgn " << tuple(r.computed_tuple) << (r.computed_tuple_in_set ? " is" : " is not")
              << " a solution\n";
  if (!r.stated_tuple.empty())
    std::cout << "St^2 + St + sgn " << tuple(r.stated_tuple) << (r.stated_tuple_in_set ? " is" : " is not")
              << " a solution\n";
  std::cout << "chi_G in Z[St]: " << (r.st_only.set.empty() ? "no" : "yes") << "\n";
  if (r.corollary_witness)
    std::cout << "witness: classes " << r.corollary_witness->first << " and " << r.corollary_witness->second
              << " share St, differ in sgn\n";
  else
    std::cout << "no witness separating sgn from Z[St]\n";
  return r.identities_hold() ? kExitOk : kExitIdentity;
}

void common_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--seed", c.seed, "seed for randomized linear algebra")->capture_default_str();
  sub->add_option("--tol", c.tol, "numerical tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--json", c.json_path, "write the JSON report to this path");
  sub->add_option("--cache", c.cache_dir, "character-table cache directory");
  sub->add_option("--cap", c.cap, "group-order limit (operator limit for theorem1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character tables, twisted traces and Gelfand-model checks for finite groups"};
  app.require_subcommand(1);
  RunConfig c;

  auto* chartab = app.add_subcommand("chartab", "compute and cache a character table");
  chartab->add_option("group", c.descriptor, "cyclic:n | dihedral:n | sym:n | pgl2:q | table:path")->required();
  common_options(chartab, c);

  auto* twist = app.add_subcommand("twist", "decompose the counting function of an antiautomorphism");
  twist->add_option("group", c.descriptor)->required();
  twist->add_option("--L", c.antimorphism, "inversion | transpose | table:path")->capture_default_str();
  common_options(twist, c);

  auto* pgl2 = app.add_subcommand("pgl2", "Steinberg, sign and Coxeter-torus identities for PGL(2,q)");
  pgl2->add_option("--q", c.q, "odd prime power")->required();
  pgl2->add_option("--max-degree", c.max_degree, "largest power of St in the solver")->capture_default_str();
  common_options(pgl2, c);

  auto* theorem1 = app.add_subcommand("theorem1", "operator-level checks on L^2(G)");
  theorem1->add_option("group", c.descriptor)->required();
  theorem1->add_option("--L", c.antimorphism, "inversion | transpose | table:path")->capture_default_str();
  common_options(theorem1, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (chartab->parsed()) return c.command = "chartab", cmd_chartab(c);
    if (twist->parsed()) return c.command = "twist", cmd_twist(c);
    if (pgl2->parsed()) return c.command = "pgl2", cmd_pgl2(c);
    if (theorem1->parsed()) return c.command = "theorem1", cmd_theorem1(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
