#include "twistrace/finite_field.hpp"

#include <stdexcept>

namespace twistrace {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic m over F_p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    trim(a);
  }
  return a;
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-p digits of code.
Poly monic_from_code(std::uint32_t code, std::uint32_t deg, std::uint32_t p) {
  Poly m(deg + 1, 0);
  for (std::uint32_t i = 0; i < deg; ++i) {
    m[i] = code % p;
    code /= p;
  }
  m[deg] = 1;
  return m;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= deg / 2; ++d) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t code = 0; code < count; ++code)
      if (poly_mod(f, monic_from_code(code, d, p), p).empty()) return false;
  }
  return true;
}

Poly decode(std::uint32_t v, std::uint32_t p, std::uint32_t d) {
  Poly a(d, 0);
  for (std::uint32_t i = 0; i < d; ++i) {
    a[i] = v % p;
    v /= p;
  }
  return a;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

}  // namespace

FiniteField FiniteField::build(std::uint32_t q, std::uint32_t cap) {
  if (q < 3 || q % 2 == 0) throw DescriptorError("field size must be an odd prime power, got " + std::to_string(q));
  if (q > cap) throw CapExceeded("field size " + std::to_string(q) + " above cap " + std::to_string(cap));
  std::uint32_t p = 0;
  for (std::uint32_t c = 3; c * c <= q; c += 2)
    if (q % c == 0) {
      p = c;
      break;
    }
  if (p == 0) p = q;
  std::uint32_t d = 0;
  for (std::uint32_t r = q; r > 1; r /= p) {
    if (r % p != 0) throw DescriptorError("field size must be an odd prime power, got " + std::to_string(q));
    ++d;
  }

  FiniteField f;
  f.q_ = q;
  f.p_ = p;
  f.d_ = d;
  for (std::uint32_t code = 0;; ++code) {
    Poly m = monic_from_code(code, d, p);
    if (is_irreducible(m, p)) {
      f.modulus_ = std::move(m);
      break;
    }
  }

  f.add_.resize(std::size_t{q} * q);
  f.mul_.resize(std::size_t{q} * q);
  f.neg_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    const Poly pa = decode(a, p, d);
    Poly na(d);
    for (std::uint32_t i = 0; i < d; ++i) na[i] = (p - pa[i]) % p;
    f.neg_[a] = encode(na, p);
    for (std::uint32_t b = 0; b < q; ++b) {
      const Poly pb = decode(b, p, d);
      Poly sum(d);
      for (std::uint32_t i = 0; i < d; ++i) sum[i] = (pa[i] + pb[i]) % p;
      f.add_[std::size_t{a} * q + b] = encode(sum, p);
      Poly prod(2 * d, 0);
      for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      Poly r = poly_mod(prod, f.modulus_, p);
      r.resize(d, 0);
      f.mul_[std::size_t{a} * q + b] = encode(r, p);
    }
  }
  f.inv_.assign(q, 0);
  f.square_.assign(q, false);
  for (std::uint32_t a = 0; a < q; ++a) {
    f.square_[f.mul_[std::size_t{a} * q + a]] = true;
    for (std::uint32_t b = 1; b < q; ++b)
      if (f.mul_[std::size_t{a} * q + b] == 1) f.inv_[a] = b;
  }
  for (std::uint32_t g = 1; g < q; ++g)
    if (f.multiplicative_order({g}) == q - 1) {
      f.generator_ = {g};
      break;
    }
  return f;
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a.value == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
  return {inv_[a.value]};
}

std::uint32_t FiniteField::multiplicative_order(FieldElement a) const {
  if (a.value == 0) throw std::domain_error("zero has no multiplicative order");
  std::uint32_t k = 1;
  for (FieldElement x = a; x != one(); x = mul(x, a)) ++k;
  return k;
}

FieldElement FiniteField::non_square() const {
  for (std::uint32_t a = 1; a < q_; ++a)
    if (!square_[a]) return {a};
  throw std::logic_error("odd-order field without non-squares");
}

std::optional<std::string> FiniteField::verify_axioms(std::uint32_t limit) const {
  if (q_ > limit) return std::nullopt;
  const FieldElement z = zero(), u = one();
  for (std::uint32_t av = 0; av < q_; ++av) {
    const FieldElement a{av};
    if (add(a, z) != a || mul(a, u) != a) return "identity fails at " + to_string(a);
    if (add(a, neg(a)) != z) return "additive inverse fails at " + to_string(a);
    if (a != z && mul(a, inv(a)) != u) return "multiplicative inverse fails at " + to_string(a);
    for (std::uint32_t bv = 0; bv < q_; ++bv) {
      const FieldElement b{bv};
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return "commutativity fails";
      if (a != z && b != z && mul(a, b) == z) return "zero divisor found";
      for (std::uint32_t cv = 0; cv < q_; ++cv) {
        const FieldElement c{cv};
        if (add(add(a, b), c) != add(a, add(b, c))) return "additive associativity fails";
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return "multiplicative associativity fails";
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return "distributivity fails";
      }
    }
  }
  if (multiplicative_order(generator_) != q_ - 1) return "no generator of the multiplicative group";
  return std::nullopt;
}

std::string FiniteField::to_string(FieldElement a) const {
  if (d_ == 1) return std::to_string(a.value);
  const Poly c = decode(a.value, p_, d_);
  std::string s;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace twistrace
