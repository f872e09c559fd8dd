#include "twistrace/pgl2.hpp"

#include <algorithm>
#include <set>

namespace twistrace {

namespace {

ProjMatrix normalize(const FiniteField& f, const ProjMatrix& m) {
  FieldElement lead = m.a;
  if (lead == f.zero()) lead = m.b;
  if (lead == f.zero()) lead = m.c;
  if (lead == f.zero()) lead = m.d;
  if (lead == f.zero()) throw Error("zero matrix has no projective class");
  const FieldElement s = f.inv(lead);
  return {f.mul(s, m.a), f.mul(s, m.b), f.mul(s, m.c), f.mul(s, m.d)};
}

FieldElement det(const FiniteField& f, const ProjMatrix& m) {
  return f.sub(f.mul(m.a, m.d), f.mul(m.b, m.c));
}

ProjMatrix mat_mul(const FiniteField& f, const ProjMatrix& x, const ProjMatrix& y) {
  return {f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
          f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)), f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
}

Element lookup(const Pgl2::Data& data, const ProjMatrix& canonical) {
  const auto it = std::lower_bound(data.elements.begin(), data.elements.end(), canonical);
  if (it == data.elements.end() || *it != canonical) throw Error("matrix is not an element of PGL(2, q)");
  return static_cast<Element>(it - data.elements.begin());
}

class Pgl2Codec final : public ElementCodec {
 public:
  explicit Pgl2Codec(std::shared_ptr<const Pgl2::Data> data) : data_(std::move(data)) {}
  Element multiply(Element x, Element y) const override {
    const auto& f = data_->field;
    return lookup(*data_, normalize(f, mat_mul(f, data_->elements[x], data_->elements[y])));
  }
  Element inverse(Element x) const override {
    const auto& f = data_->field;
    const ProjMatrix& m = data_->elements[x];
    return lookup(*data_, normalize(f, {m.d, f.neg(m.b), f.neg(m.c), m.a}));
  }

 private:
  std::shared_ptr<const Pgl2::Data> data_;
};

}  // namespace

const char* to_string(Pgl2ClassKind kind) {
  switch (kind) {
    case Pgl2ClassKind::kIdentity: return "identity";
    case Pgl2ClassKind::kUnipotent: return "unipotent";
    case Pgl2ClassKind::kHyperbolic: return "hyperbolic";
    case Pgl2ClassKind::kElliptic: return "elliptic";
  }
  return "unknown";
}

ProjMatrix Pgl2::canonical(const ProjMatrix& m) const { return normalize(data_->field, m); }

Element Pgl2::index_of(const ProjMatrix& m) const {
  if (det(data_->field, m) == data_->field.zero()) throw Error("singular matrix");
  return lookup(*data_, canonical(m));
}

ProjMatrix Pgl2::product(const ProjMatrix& x, const ProjMatrix& y) const {
  return canonical(mat_mul(data_->field, x, y));
}

FieldElement Pgl2::determinant(Element g) const { return det(data_->field, data_->elements[g]); }

std::size_t Pgl2::fixed_points(Element g) const {
  const auto& f = data_->field;
  const ProjMatrix& m = data_->elements[g];
  // [x : y] is fixed iff (a x + b y) y = (c x + d y) x
  auto fixed = [&](FieldElement x, FieldElement y) {
    const FieldElement u = f.add(f.mul(m.a, x), f.mul(m.b, y));
    const FieldElement v = f.add(f.mul(m.c, x), f.mul(m.d, y));
    return f.mul(u, y) == f.mul(v, x);
  };
  std::size_t count = fixed(f.one(), f.zero()) ? 1 : 0;
  for (std::uint32_t x = 0; x < f.q(); ++x) count += fixed(f.element(x), f.one());
  return count;
}

Pgl2 build_pgl2(const FiniteField& field, std::size_t cap) {
  const std::size_t q = field.q();
  const std::size_t order = q * q * q - q;
  if (order > cap)
    throw CapExceeded("PGL(2, " + std::to_string(q) + ") has order " + std::to_string(order) +
                      " above cap " + std::to_string(cap));
  auto data = std::make_shared<Pgl2::Data>(Pgl2::Data{field, {}});
  data->elements.reserve(order);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          const ProjMatrix m{{a}, {b}, {c}, {d}};
          if (det(field, m) == field.zero()) continue;
          if (normalize(field, m) != m) continue;
          data->elements.push_back(m);
        }
  if (data->elements.size() != order) throw Error("PGL(2, q) enumeration produced the wrong order");
  const Element identity = lookup(*data, {field.one(), field.zero(), field.zero(), field.one()});
  auto codec = std::make_shared<Pgl2Codec>(data);
  FiniteGroup group("pgl2:" + std::to_string(q), order, identity, std::move(codec));
  return Pgl2(std::move(data), std::move(group));
}

std::vector<Pgl2ClassKind> class_kinds(const Pgl2& g, const ClassData& cd) {
  std::vector<Pgl2ClassKind> kinds;
  for (Element rep : cd.reps) {
    const std::size_t fp = g.fixed_points(rep);
    if (rep == g.group().identity()) kinds.push_back(Pgl2ClassKind::kIdentity);
    else if (fp == 2) kinds.push_back(Pgl2ClassKind::kHyperbolic);
    else if (fp == 1) kinds.push_back(Pgl2ClassKind::kUnipotent);
    else if (fp == 0) kinds.push_back(Pgl2ClassKind::kElliptic);
    else throw Error("non-identity element of PGL(2, q) with more than two fixed points");
  }
  return kinds;
}

std::vector<std::size_t> report_class_order(const Pgl2& g, const ClassData& cd) {
  const auto kinds = class_kinds(g, cd);
  std::vector<std::size_t> order(cd.num_classes());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (kinds[x] != kinds[y]) return kinds[x] < kinds[y];
    return cd.reps[x] < cd.reps[y];
  });
  return order;
}

ClassFunction steinberg_character(const Pgl2& g, std::shared_ptr<const ClassSpace> space) {
  ClassFunction st{space, std::vector<Complex>(space->num_classes())};
  for (std::size_t j = 0; j < st.size(); ++j)
    st[j] = static_cast<double>(g.fixed_points(space->classes.reps[j])) - 1.0;
  return st;
}

ClassFunction sign_character(const Pgl2& g, std::shared_ptr<const ClassSpace> space) {
  ClassFunction sgn{space, std::vector<Complex>(space->num_classes())};
  for (std::size_t j = 0; j < sgn.size(); ++j)
    sgn[j] = g.field().is_square(g.determinant(space->classes.reps[j])) ? 1.0 : -1.0;
  return sgn;
}

std::vector<Element> coxeter_torus(const Pgl2& g) {
  const FiniteField& f = g.field();
  const FieldElement nu = f.non_square();
  std::set<Element> members;
  for (std::uint32_t u = 0; u < f.q(); ++u)
    for (std::uint32_t v = 0; v < f.q(); ++v) {
      if (u == 0 && v == 0) continue;
      const FieldElement uu = f.element(u), vv = f.element(v);
      members.insert(g.index_of({uu, f.mul(nu, vv), vv, uu}));
    }
  std::vector<Element> torus(members.begin(), members.end());
  const FiniteGroup& grp = g.group();
  if (torus.size() != g.q() + 1) throw Error("Coxeter torus has the wrong order");
  bool cyclic = false;
  for (Element t : torus) {
    if (!members.contains(grp.inv(t))) throw Error("Coxeter torus is not closed under inverses");
    for (Element s : torus)
      if (!members.contains(grp.mul(t, s))) throw Error("Coxeter torus is not closed under products");
    if (grp.element_order(t) == torus.size()) cyclic = true;
    if (t != grp.identity() && g.fixed_points(t) != 0) throw Error("Coxeter torus does not act freely");
  }
  if (!cyclic) throw Error("Coxeter torus is not cyclic");
  return torus;
}

Antimorphism transpose_antimorphism(const Pgl2& g) {
  std::vector<Element> map(g.group().order());
  for (std::size_t x = 0; x < map.size(); ++x) {
    const ProjMatrix& m = g.matrix(static_cast<Element>(x));
    map[x] = g.index_of({m.a, m.c, m.b, m.d});
  }
  return check_antimorphism(g.group(), std::move(map), "transpose");
}

ApIdentityReport verify_ap_identity(const ClassFunction& st, const ClassFunction& induced_torus) {
  require_same_space(st, induced_torus);
  ApIdentityReport report;
  report.steinberg = to_integers(st);
  report.induced = to_integers(induced_torus);
  const std::size_t r = st.size();
  report.st_squared.resize(r);
  report.residual.resize(r);
  for (std::size_t j = 0; j < r; ++j) {
    report.st_squared[j] = report.steinberg[j] * report.steinberg[j];
    report.residual[j] = report.st_squared[j] - report.induced[j] - report.steinberg[j];
    if (report.residual[j] != 0 && !report.witness_class) report.witness_class = j;
  }
  return report;
}

bool StPolynomialSolutions::contains(const IntVector& coefficients) const {
  const std::size_t unknowns = system.empty() ? 0 : system[0].size();
  if (coefficients.size() != unknowns) return false;
  return multiply(system, coefficients) == target;
}

namespace {

StPolynomialSolutions solve_with(const ClassFunction& st, const ClassFunction* sgn,
                                 const ClassFunction& target, std::size_t max_degree) {
  require_same_space(st, target);
  const auto st_int = to_integers(st);
  const auto target_int = to_integers(target);
  std::vector<long long> sgn_int;
  if (sgn) {
    require_same_space(st, *sgn);
    sgn_int = to_integers(*sgn);
  }
  const std::size_t r = st.size();
  StPolynomialSolutions out;
  out.max_degree = max_degree;
  out.system.assign(r, {});
  out.target.resize(r);
  for (std::size_t j = 0; j < r; ++j) {
    out.target[j] = target_int[j];
    // powers St(j)^i for i = max_degree down to 0
    for (std::size_t i = max_degree + 1; i-- > 0;) {
      BigInt power = 1;
      for (std::size_t e = 0; e < i; ++e) power *= st_int[j];
      out.system[j].push_back(power);
      if (sgn) out.system[j].push_back(power * sgn_int[j]);
    }
  }
  out.set = solve_integer_system(out.system, out.target);
  return out;
}

}  // namespace

StPolynomialSolutions solve_polynomial_in_st(const ClassFunction& st, const ClassFunction& sgn,
                                             const ClassFunction& target, std::size_t max_degree) {
  return solve_with(st, &sgn, target, max_degree);
}

StPolynomialSolutions solve_polynomial_in_st_only(const ClassFunction& st, const ClassFunction& target,
                                                  std::size_t max_degree) {
  return solve_with(st, nullptr, target, max_degree);
}

std::vector<std::pair<std::size_t, std::size_t>> all_separation_witnesses(const ClassFunction& f,
                                                                           const ClassFunction& h) {
  require_same_space(f, h);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (std::abs(f[i] - f[j]) <= kIntegralSlack && std::abs(h[i] - h[j]) > kIntegralSlack)
        out.emplace_back(i, j);
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> separation_witness(const ClassFunction& f,
                                                                       const ClassFunction& h) {
  auto all = all_separation_witnesses(f, h);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace twistrace
