#include <array>
#include <numeric>

#include "twistrace/group.hpp"

namespace twistrace {

namespace {

class CyclicCodec final : public ElementCodec {
 public:
  explicit CyclicCodec(std::size_t n) : n_(n) {}
  Element multiply(Element a, Element b) const override {
    return static_cast<Element>((std::size_t{a} + b) % n_);
  }
  Element inverse(Element a) const override { return static_cast<Element>((n_ - a) % n_); }

 private:
  std::size_t n_;
};

// r^k s^f stored as f*n + k; s r s = r^-1.
class DihedralCodec final : public ElementCodec {
 public:
  explicit DihedralCodec(std::size_t n) : n_(n) {}
  Element multiply(Element a, Element b) const override {
    const std::size_t fa = a / n_, ka = a % n_;
    const std::size_t fb = b / n_, kb = b % n_;
    const std::size_t k = fa ? (ka + n_ - kb) % n_ : (ka + kb) % n_;
    return static_cast<Element>((fa ^ fb) * n_ + k);
  }
  Element inverse(Element a) const override {
    if (a >= n_) return a;
    return static_cast<Element>((n_ - a) % n_);
  }

 private:
  std::size_t n_;
};

class SymmetricCodec final : public ElementCodec {
 public:
  explicit SymmetricCodec(std::size_t n) : n_(n) {}
  Element multiply(Element a, Element b) const override {
    const auto p = permutation_of(n_, a);
    const auto q = permutation_of(n_, b);
    std::vector<std::uint8_t> r(n_);
    for (std::size_t x = 0; x < n_; ++x) r[x] = p[q[x]];
    return static_cast<Element>(rank_of(r));
  }
  Element inverse(Element a) const override {
    const auto p = permutation_of(n_, a);
    std::vector<std::uint8_t> r(n_);
    for (std::size_t x = 0; x < n_; ++x) r[p[x]] = static_cast<std::uint8_t>(x);
    return static_cast<Element>(rank_of(r));
  }

 private:
  std::size_t n_;
};

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<std::uint8_t> permutation_of(std::size_t n, std::size_t rank) {
  std::vector<std::uint8_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::uint8_t{0});
  std::vector<std::uint8_t> perm;
  perm.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t f = factorial(n - 1 - i);
    const std::size_t digit = rank / f;
    rank %= f;
    perm.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return perm;
}

std::size_t rank_of(std::span<const std::uint8_t> perm) {
  const std::size_t n = perm.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += perm[j] < perm[i];
    rank += smaller * factorial(n - 1 - i);
  }
  return rank;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw DescriptorError("cyclic:<n> needs n >= 1");
  return FiniteGroup("cyclic:" + std::to_string(n), n, 0, std::make_shared<CyclicCodec>(n));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw DescriptorError("dihedral:<n> needs n >= 1");
  return FiniteGroup("dihedral:" + std::to_string(n), 2 * n, 0, std::make_shared<DihedralCodec>(n));
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0) throw DescriptorError("sym:<n> needs n >= 1");
  if (n > 12) throw CapExceeded("sym:<n> is limited to n <= 12");
  return FiniteGroup("sym:" + std::to_string(n), factorial(n), 0, std::make_shared<SymmetricCodec>(n));
}

}  // namespace twistrace
