#include "twistrace/class_function.hpp"

#include <cmath>

namespace twistrace {

std::shared_ptr<const ClassSpace> make_class_space(const FiniteGroup& g) {
  auto space = std::make_shared<ClassSpace>();
  space->group = g.label();
  space->order = g.order();
  space->classes = conjugacy_classes(g);
  return space;
}

ClassFunction constant_function(std::shared_ptr<const ClassSpace> space, Complex value) {
  const std::size_t r = space->num_classes();
  return ClassFunction{std::move(space), std::vector<Complex>(r, value)};
}

ClassFunction trivial_character(std::shared_ptr<const ClassSpace> space) {
  return constant_function(std::move(space), 1.0);
}

void require_same_space(const ClassFunction& a, const ClassFunction& b) {
  if (!a.space || !b.space) throw GroupMismatch("class function without a class space");
  if (a.space == b.space) return;
  if (a.space->group != b.space->group || a.space->order != b.space->order ||
      a.space->classes.sizes != b.space->classes.sizes || a.size() != b.size())
    throw GroupMismatch("class functions over different groups: " + a.space->group + " vs " +
                        b.space->group);
}

Complex inner_product(const ClassFunction& f, const ClassFunction& h) {
  require_same_space(f, h);
  const auto& sizes = f.space->classes.sizes;
  Complex acc = 0;
  for (std::size_t j = 0; j < f.size(); ++j)
    acc += static_cast<double>(sizes[j]) * f[j] * std::conj(h[j]);
  return acc / static_cast<double>(f.space->order);
}

namespace {

template <typename Op>
ClassFunction pointwise(const ClassFunction& a, const ClassFunction& b, Op op) {
  require_same_space(a, b);
  ClassFunction out{a.space, std::vector<Complex>(a.size())};
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = op(a[j], b[j]);
  return out;
}

}  // namespace

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  return pointwise(a, b, std::plus<>{});
}
ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
  return pointwise(a, b, std::minus<>{});
}
ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  return pointwise(a, b, std::multiplies<>{});
}
ClassFunction operator*(Complex s, const ClassFunction& a) {
  ClassFunction out = a;
  for (auto& v : out.values) v *= s;
  return out;
}

double max_distance(const ClassFunction& f, const ClassFunction& h) {
  require_same_space(f, h);
  double worst = 0;
  for (std::size_t j = 0; j < f.size(); ++j) worst = std::max(worst, std::abs(f[j] - h[j]));
  return worst;
}

std::vector<long long> to_integers(const ClassFunction& f, double slack) {
  std::vector<long long> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double re = std::round(f[j].real());
    if (std::abs(f[j].real() - re) > slack || std::abs(f[j].imag()) > slack)
      throw NumericalError("value at class " + std::to_string(j) + " of " + f.space->group +
                           " is not an integer within " + std::to_string(slack));
    out[j] = static_cast<long long>(re);
  }
  return out;
}

ClassFunction from_integers(std::shared_ptr<const ClassSpace> space, const std::vector<long long>& v) {
  ClassFunction out{std::move(space), std::vector<Complex>(v.size())};
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = static_cast<double>(v[j]);
  return out;
}

}  // namespace twistrace
