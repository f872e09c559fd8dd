#include "twistrace/twisted_trace.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace twistrace {

namespace {

void require_group(const CharacterTable& t, const Antimorphism& l) {
  const FiniteGroup& g = l.source();
  if (t.space->group != g.label() || t.space->order != g.order())
    throw GroupMismatch("antimorphism on " + g.label() + " used with the table of " + t.space->group);
}

// (1/|G|) sum_j counts_j chi_k(j) for every row.
std::vector<Complex> average_over_buckets(const CharacterTable& t, const std::vector<long long>& counts) {
  std::vector<Complex> out;
  out.reserve(t.size());
  for (const auto& row : t.rows) {
    Complex acc = 0;
    for (std::size_t j = 0; j < counts.size(); ++j) acc += static_cast<double>(counts[j]) * row[j];
    out.push_back(acc / static_cast<double>(t.space->order));
  }
  return out;
}

}  // namespace

CountingFunction counting_function(const Antimorphism& l, std::shared_ptr<const ClassSpace> space) {
  const FiniteGroup& g = l.source();
  if (space->group != g.label() || space->order != g.order())
    throw GroupMismatch("class space does not belong to " + g.label());
  const std::size_t n = g.order();
  CountingFunction out;
  out.per_element.assign(n, 0);
  // h g = L(h)  <=>  g = h^-1 L(h): each h lands on exactly one g.
  for (std::size_t h = 0; h < n; ++h) {
    const auto he = static_cast<Element>(h);
    ++out.per_element[g.mul(g.inv(he), l(he))];
  }
  for (long long c : out.per_element) out.total += c;

  const ClassData& cd = space->classes;
  for (std::size_t x = 0; x < n && !out.noncentral_witness; ++x) {
    const Element rep = cd.reps[cd.class_of[x]];
    if (out.per_element[x] != out.per_element[rep])
      out.noncentral_witness = std::make_pair(rep, static_cast<Element>(x));
  }
  out.by_class = ClassFunction{space, std::vector<Complex>(cd.num_classes())};
  for (std::size_t j = 0; j < cd.num_classes(); ++j)
    out.by_class[j] = static_cast<double>(out.per_element[cd.reps[j]]);
  return out;
}

SymmetryResult symmetry_check(const ClassFunction& counting, const ClassData& cd) {
  SymmetryResult result;
  for (std::size_t j = 0; j < cd.num_classes(); ++j)
    if (counting[j] != counting[cd.inverse_class[j]]) {
      result.holds = false;
      result.witness_class = j;
      break;
    }
  return result;
}

std::vector<Complex> lambda_average(const CharacterTable& t, const Antimorphism& l) {
  require_group(t, l);
  const FiniteGroup& g = l.source();
  const ClassData& cd = t.space->classes;
  std::vector<long long> counts(cd.num_classes(), 0);
  for (std::size_t h = 0; h < g.order(); ++h) {
    const auto he = static_cast<Element>(h);
    ++counts[cd.class_of[g.mul(l(he), g.inv(he))]];
  }
  return average_over_buckets(t, counts);
}

std::vector<Complex> twisted_fs_indicator(const CharacterTable& t, const Antimorphism& l) {
  require_group(t, l);
  const FiniteGroup& g = l.source();
  const ClassData& cd = t.space->classes;
  std::vector<long long> counts(cd.num_classes(), 0);
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto xe = static_cast<Element>(x);
    const Element tau = l(g.inv(xe));
    ++counts[cd.class_of[g.mul(xe, tau)]];
  }
  return average_over_buckets(t, counts);
}

std::vector<bool> chi_L_invariance(const CharacterTable& t, const Antimorphism& l, double tol) {
  require_group(t, l);
  const ClassData& cd = t.space->classes;
  std::vector<bool> out(t.size(), true);
  for (std::size_t x = 0; x < cd.class_of.size(); ++x) {
    const std::size_t from = cd.class_of[x];
    const std::size_t to = cd.class_of[l(static_cast<Element>(x))];
    if (from == to) continue;
    for (std::size_t k = 0; k < t.size(); ++k)
      if (std::abs(t.rows[k][to] - t.rows[k][from]) > tol) out[k] = false;
  }
  return out;
}

bool TwistReport::all_invariant() const {
  return std::all_of(chi_L_invariant.begin(), chi_L_invariant.end(), [](bool b) { return b; });
}

TwistReport analyze(const Antimorphism& l, const CharacterTable& t, double tol) {
  require_group(t, l);
  const FiniteGroup& g = l.source();
  TwistReport rep;
  rep.group = g.label();
  rep.antimorphism = l.name();

  CountingFunction counting = counting_function(l, t.space);
  if (counting.total != static_cast<long long>(g.order()))
    throw NumericalError(g.label() + ": counting function mass differs from the group order");
  rep.counting_total = counting.total;
  rep.counting_central = counting.central();
  rep.noncentral_witness = counting.noncentral_witness;
  rep.counting = counting.by_class;

  // Elementwise, so that a non-central count cannot fake an asymmetry.
  for (std::size_t x = 0; x < g.order() && rep.symmetric; ++x)
    if (counting.per_element[x] != counting.per_element[g.inv(static_cast<Element>(x))]) {
      rep.symmetric = false;
      rep.asymmetric_class = t.space->classes.class_of[x];
    }

  rep.lambda_fourier = fourier_coefficients(rep.counting, t);
  rep.lambda_average = lambda_average(t, l);
  rep.c_tau = twisted_fs_indicator(t, l);
  rep.chi_L_invariant = chi_L_invariance(t, l, tol);
  rep.fixed_points = l.fixed_point_count();
  for (long long n : t.degrees) rep.degree_sum += n;
  rep.distance_to_gelfand = max_distance(rep.counting, gelfand_character(t));

  long long expansion = 0;
  bool all_plus_one = true;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const Complex lf = rep.lambda_fourier[k];
    const double rounded = std::round(lf.real());
    if (std::abs(lf - Complex(rounded)) > kIntegralSlack) {
      std::ostringstream os;
      os << g.label() << ": Fourier coefficient " << k << " = " << lf << " is not integral";
      throw NumericalError(os.str());
    }
    rep.epsilon.push_back(static_cast<long long>(rounded));
    expansion += rep.epsilon.back() * t.degrees[k];
    all_plus_one = all_plus_one && rep.epsilon.back() == 1;
    if (!rep.chi_L_invariant[k]) continue;

    if (std::abs(rounded) != 1.0) {
      std::ostringstream os;
      os << g.label() << ": invariant character " << k << " has coefficient " << lf << ", not +-1";
      throw NumericalError(os.str());
    }
    const double d = std::max({std::abs(lf - rep.lambda_average[k]), std::abs(lf - rep.c_tau[k]),
                               std::abs(rep.lambda_average[k] - rep.c_tau[k])});
    rep.path_discrepancy = std::max(rep.path_discrepancy, d);
  }
  if (rep.path_discrepancy > tol) {
    std::ostringstream os;
    os << g.label() << " / " << l.name() << ": coefficient paths disagree by " << rep.path_discrepancy;
    throw NumericalError(os.str());
  }
  if (expansion != static_cast<long long>(rep.fixed_points))
    throw NumericalError(g.label() + ": fixed points differ from sum_k epsilon_k n_k");

  rep.gelfand_model = static_cast<long long>(rep.fixed_points) == rep.degree_sum;
  if (rep.gelfand_model != all_plus_one)
    throw NumericalError(g.label() + ": fixed-point criterion and all-ones criterion disagree");
  return rep;
}

}  // namespace twistrace
