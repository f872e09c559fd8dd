#include "twistrace/matrix_coeffs.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "twistrace/random.hpp"
#include "twistrace/twisted_trace.hpp"

namespace twistrace {

namespace {

constexpr int kSplitAttempts = 8;

double max_abs(const Operator& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

Complex random_complex(SplitMix64& rng) { return {rng.uniform_signed(), rng.uniform_signed()}; }

MatrixCoeffBasis assemble(const FiniteGroup& g, std::vector<long long> degrees,
                          std::vector<std::vector<Operator>> irreps) {
  MatrixCoeffBasis b{g, std::move(degrees), std::move(irreps), {}, {}, {}};
  const std::size_t n = g.order();
  b.functions = Operator::Zero(idx(n), idx(n));
  std::size_t col = 0;
  for (std::size_t k = 0; k < b.degrees.size(); ++k) {
    b.offsets.push_back(col);
    const auto nk = static_cast<std::size_t>(b.degrees[k]);
    for (std::size_t i = 0; i < nk; ++i)
      for (std::size_t j = 0; j < nk; ++j) {
        for (std::size_t x = 0; x < n; ++x) b.functions(idx(x), idx(col)) = b.irreps[k][x](idx(i), idx(j));
        b.labels.push_back({k, i, j});
        ++col;
      }
  }
  if (col != n) throw NumericalError("matrix coefficients do not fill L^2(G)");
  return b;
}

// Coordinates of sigma~_g on the matrix-coefficient basis.
Operator sigma_tilde_coordinates(const MatrixCoeffBasis& b, Element g) {
  const std::size_t n = b.group.order();
  Operator m = Operator::Zero(idx(n), idx(n));
  for (std::size_t k = 0; k < b.degrees.size(); ++k) {
    const auto nk = static_cast<std::size_t>(b.degrees[k]);
    const Operator& pi = b.irreps[k][g];
    for (std::size_t i = 0; i < nk; ++i)
      for (std::size_t j = 0; j < nk; ++j)
        for (std::size_t l = 0; l < nk; ++l) m(idx(b.column(k, l, j)), idx(b.column(k, i, j))) = pi(idx(l), idx(i));
  }
  return m;
}

}  // namespace

RegularSpace::RegularSpace(FiniteGroup g, std::size_t cap) : group_(std::move(g)) {
  if (group_.order() > cap)
    throw CapExceeded(group_.label() + " has order " + std::to_string(group_.order()) +
                      " above the operator cap " + std::to_string(cap));
}

std::vector<Element> RegularSpace::rho_pullback(Element g) const {
  std::vector<Element> p(dimension());
  for (std::size_t h = 0; h < p.size(); ++h) p[h] = group_.mul(static_cast<Element>(h), g);
  return p;
}

std::vector<Element> RegularSpace::sigma_pullback(Element g) const {
  std::vector<Element> p(dimension());
  const Element gi = group_.inv(g);
  for (std::size_t h = 0; h < p.size(); ++h) p[h] = group_.mul(gi, static_cast<Element>(h));
  return p;
}

Operator RegularSpace::dense(const std::vector<Element>& pullback) const {
  Operator m = Operator::Zero(idx(pullback.size()), idx(pullback.size()));
  for (std::size_t h = 0; h < pullback.size(); ++h) m(idx(h), idx(pullback[h])) = 1.0;
  return m;
}

Operator apply_rows(const std::vector<Element>& pullback, const Operator& x) {
  Operator out(x.rows(), x.cols());
  for (std::size_t h = 0; h < pullback.size(); ++h) out.row(idx(h)) = x.row(idx(pullback[h]));
  return out;
}

Operator apply_columns(const Operator& x, const std::vector<Element>& pullback) {
  Operator out(x.rows(), x.cols());
  for (std::size_t h = 0; h < pullback.size(); ++h) out.col(idx(pullback[h])) = x.col(idx(h));
  return out;
}

std::vector<Operator> isotypic_projectors(const CharacterTable& t, const RegularSpace& reg) {
  const FiniteGroup& g = reg.group();
  if (t.space->group != g.label()) throw GroupMismatch("table and regular space over different groups");
  const std::size_t n = g.order();
  const auto& cd = t.space->classes;
  std::vector<Operator> out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    Operator p = Operator::Zero(idx(n), idx(n));
    const double scale = static_cast<double>(t.degrees[k]) / static_cast<double>(n);
    for (std::size_t x = 0; x < n; ++x) {
      const Complex c = scale * std::conj(t.rows[k][cd.class_of[x]]);
      for (std::size_t h = 0; h < n; ++h) p(idx(h), idx(g.mul(static_cast<Element>(h), static_cast<Element>(x)))) += c;
    }
    out.push_back(std::move(p));
  }
  return out;
}

ProjectorCheck check_projectors(const std::vector<Operator>& projectors, const CharacterTable& t) {
  ProjectorCheck c;
  if (projectors.empty()) return c;
  const Eigen::Index n = projectors[0].rows();
  Operator sum = Operator::Zero(n, n);
  for (std::size_t k = 0; k < projectors.size(); ++k) {
    const Operator& p = projectors[k];
    sum += p;
    c.idempotence = std::max(c.idempotence, max_abs(p * p - p));
    const double nk = static_cast<double>(t.degrees[k]);
    c.rank = std::max(c.rank, std::abs(p.trace() - Complex(nk * nk)));
    for (std::size_t l = 0; l < projectors.size(); ++l)
      if (l != k) c.orthogonality = std::max(c.orthogonality, max_abs(p * projectors[l]));
  }
  c.completeness = max_abs(sum - Operator::Identity(n, n));
  return c;
}

MatrixCoeffBasis extract_irreps(const std::vector<Operator>& projectors, const RegularSpace& reg,
                                const CharacterTable& t, std::uint64_t seed) {
  const FiniteGroup& g = reg.group();
  const std::size_t n = g.order();
  if (projectors.size() != t.size()) throw GroupMismatch("one projector per character expected");
  SplitMix64 rng(seed);
  std::vector<std::vector<Element>> rho(n), sigma(n);
  for (std::size_t x = 0; x < n; ++x) {
    rho[x] = reg.rho_pullback(static_cast<Element>(x));
    sigma[x] = reg.sigma_pullback(static_cast<Element>(x));
  }

  std::vector<std::vector<Operator>> irreps;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const auto nk = static_cast<std::size_t>(t.degrees[k]);
    const std::size_t dim = nk * nk;
    Eigen::SelfAdjointEigenSolver<Operator> proj(projectors[k]);
    const auto& ev = proj.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      const double expect = i >= ev.size() - idx(dim) ? 1.0 : 0.0;
      if (std::abs(ev(i) - expect) > 1e-6)
        throw NumericalError(g.label() + ": isotypic projector " + std::to_string(k) + " has the wrong rank");
    }
    const Operator basis = proj.eigenvectors().rightCols(idx(dim));

    Operator copy;
    for (int attempt = 0; attempt < kSplitAttempts && copy.size() == 0; ++attempt) {
      // A Hermitian element of the commutant of rho: it acts on the multiplicity
      // space of the isotypic component, so its eigenspaces are rho-invariant.
      Operator b = Operator::Zero(idx(n), idx(n));
      for (std::size_t x = 0; x < n; ++x) {
        const Complex c = random_complex(rng);
        for (std::size_t h = 0; h < n; ++h) b(idx(h), idx(sigma[x][h])) += c;
      }
      const Operator herm = basis.adjoint() * (b + b.adjoint()) * basis;
      Eigen::SelfAdjointEigenSolver<Operator> split(herm);
      const auto& lam = split.eigenvalues();
      const double scale = std::max(1.0, lam.cwiseAbs().maxCoeff());
      bool clean = true;
      for (std::size_t c = 0; c < nk && clean; ++c) {
        const double lo = lam(idx(c * nk)), hi = lam(idx(c * nk + nk - 1));
        if (hi - lo > 1e-9 * scale) clean = false;
        if (c + 1 < nk && lam(idx((c + 1) * nk)) - hi < 1e-6 * scale) clean = false;
      }
      if (clean) copy = basis * split.eigenvectors().leftCols(idx(nk));
    }
    if (copy.size() == 0)
      throw NumericalError(g.label() + ": could not split isotypic component " + std::to_string(k) +
                           " into copies of the irreducible");

    std::vector<Operator> mats(n);
    for (std::size_t x = 0; x < n; ++x) mats[x] = copy.adjoint() * apply_rows(rho[x], copy);
    irreps.push_back(std::move(mats));
  }
  return assemble(g, t.degrees, std::move(irreps));
}

Operator MatrixCoeffBasis::inverse_functions() const {
  Operator inv = functions.adjoint();
  const double order = static_cast<double>(group.order());
  for (std::size_t c = 0; c < labels.size(); ++c)
    inv.row(idx(c)) *= static_cast<double>(degrees[labels[c][0]]) / order;
  return inv;
}

IrrepCheck check_irreps(const MatrixCoeffBasis& b, const CharacterTable& t) {
  IrrepCheck c;
  const FiniteGroup& g = b.group;
  const std::size_t n = g.order();
  const auto& cd = t.space->classes;
  for (std::size_t k = 0; k < b.irreps.size(); ++k) {
    const auto& pi = b.irreps[k];
    const Eigen::Index nk = idx(static_cast<std::size_t>(b.degrees[k]));
    for (std::size_t x = 0; x < n; ++x) {
      const auto xe = static_cast<Element>(x);
      c.unitarity = std::max(c.unitarity, max_abs(pi[x] * pi[x].adjoint() - Operator::Identity(nk, nk)));
      c.character = std::max(c.character, std::abs(pi[x].trace() - t.rows[k][cd.class_of[x]]));
      c.conjugate_transpose = std::max(c.conjugate_transpose, max_abs(pi[g.inv(xe)] - pi[x].adjoint()));
      for (std::size_t y = 0; y < n; ++y)
        c.homomorphism = std::max(c.homomorphism, max_abs(pi[x] * pi[y] - pi[g.mul(xe, static_cast<Element>(y))]));
    }
  }
  Operator gram = b.functions.adjoint() * b.functions;
  for (std::size_t col = 0; col < b.labels.size(); ++col)
    gram(idx(col), idx(col)) -= static_cast<double>(n) / static_cast<double>(b.degrees[b.labels[col][0]]);
  c.schur = max_abs(gram) / static_cast<double>(n);
  return c;
}

Operator build_T(const MatrixCoeffBasis& b) {
  Operator swapped(b.functions.rows(), b.functions.cols());
  for (std::size_t col = 0; col < b.labels.size(); ++col) {
    const auto [k, i, j] = b.labels[col];
    swapped.col(idx(b.column(k, j, i))) = b.functions.col(idx(col));
  }
  return swapped * b.inverse_functions();
}

Operator build_sigma_tilde(const MatrixCoeffBasis& b, Element g) {
  return b.functions * sigma_tilde_coordinates(b, g) * b.inverse_functions();
}

Theorem1Report verify_theorem1(const MatrixCoeffBasis& b, const Operator& t_op, const CharacterTable& t) {
  const FiniteGroup& g = b.group;
  const std::size_t n = g.order();
  RegularSpace reg(g, n);
  Theorem1Report rep;
  rep.irreps = check_irreps(b, t);
  // In coordinates sigma~_g acts on the k-block by pi_k(g) on the first index.
  rep.homomorphism = rep.irreps.homomorphism;
  rep.involution = max_abs(t_op * t_op - Operator::Identity(idx(n), idx(n)));

  const ClassFunction gelfand = gelfand_character(t);
  const auto& cd = t.space->classes;
  std::vector<std::vector<Element>> rho(n);
  std::vector<Operator> sigma_tilde(n);
  const Operator inv = b.inverse_functions();
  for (std::size_t x = 0; x < n; ++x) {
    rho[x] = reg.rho_pullback(static_cast<Element>(x));
    sigma_tilde[x] = b.functions * sigma_tilde_coordinates(b, static_cast<Element>(x)) * inv;
  }
  std::vector<Complex> traces(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Operator rt = apply_rows(rho[x], t_op);
    rep.intertwining = std::max(rep.intertwining, max_abs(rt - t_op * sigma_tilde[x]));
    traces[x] = rt.trace();
    rep.trace = std::max(rep.trace, std::abs(traces[x] - gelfand[cd.class_of[x]]));
    for (std::size_t y = 0; y < n; ++y)
      rep.commuting = std::max(rep.commuting, max_abs(apply_rows(rho[x], sigma_tilde[y]) -
                                                      apply_columns(sigma_tilde[y], rho[x])));
  }
  for (Element r : cd.reps) rep.traces_by_class.push_back(traces[r]);
  return rep;
}

MatrixCoeffBasis align_to_antimorphism(const Antimorphism& l, const MatrixCoeffBasis& b, std::uint64_t seed,
                                       double* takagi_residual, double* symmetry_residual) {
  const FiniteGroup& g = b.group;
  const std::size_t n = g.order();
  SplitMix64 rng(seed ^ 0x5ca1ab1eULL);
  double takagi = 0, symmetry = 0;
  std::vector<std::vector<Operator>> aligned;
  for (std::size_t k = 0; k < b.irreps.size(); ++k) {
    const auto& pi = b.irreps[k];
    const Eigen::Index nk = idx(static_cast<std::size_t>(b.degrees[k]));

    // A intertwines pi with psi(g) = pi(L(g))^T: psi(g) A = A pi(g).
    Operator a;
    for (int attempt = 0; attempt < kSplitAttempts; ++attempt) {
      Operator x(nk, nk);
      for (Eigen::Index i = 0; i < nk; ++i)
        for (Eigen::Index j = 0; j < nk; ++j) x(i, j) = random_complex(rng);
      Operator acc = Operator::Zero(nk, nk);
      for (std::size_t y = 0; y < n; ++y) acc += pi[l(static_cast<Element>(y))].transpose() * x * pi[y].adjoint();
      const double scale = (acc.adjoint() * acc).trace().real() / static_cast<double>(nk);
      if (scale > 1e-8) {
        a = acc / std::sqrt(scale);
        break;
      }
    }
    if (a.size() == 0) throw NumericalError(g.label() + ": no intertwiner between pi and pi o L transposed");

    // pi(L(g)) = C pi(g)^T C^-1 with C = A^-T = conj(A) for unitary A.
    const Operator c = a.conjugate();
    symmetry = std::max(symmetry, max_abs(c.transpose() - c));
    if (max_abs(c.transpose() + c) < 1e-6)
      throw NumericalError(g.label() + ": character " + std::to_string(k) + " has an antisymmetric form");

    // Takagi factorization C = V V^T: the real and imaginary parts of a symmetric
    // unitary matrix are commuting real symmetric matrices.
    const Eigen::MatrixXd re = (c.real() + c.real().transpose()) / 2.0;
    const Eigen::MatrixXd im = (c.imag() + c.imag().transpose()) / 2.0;
    Operator v;
    double best = std::numeric_limits<double>::infinity();
    for (double t : {0.5772156649015329, 1.4142135623730951, 2.718281828459045, 0.3183098861837907}) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(re + t * im);
      const Operator o = es.eigenvectors().cast<Complex>();
      const Operator d = o.transpose() * c * o;
      Operator cand = o;
      for (Eigen::Index j = 0; j < nk; ++j) cand.col(j) *= std::sqrt(d(j, j));
      const double residual = max_abs(cand * cand.transpose() - c);
      if (residual < best) {
        best = residual;
        v = cand;
      }
      if (residual < 1e-10) break;
    }
    takagi = std::max(takagi, best);

    std::vector<Operator> mats(n);
    for (std::size_t y = 0; y < n; ++y) mats[y] = v.adjoint() * pi[y] * v;
    aligned.push_back(std::move(mats));
  }
  if (takagi_residual) *takagi_residual = takagi;
  if (symmetry_residual) *symmetry_residual = symmetry;
  return assemble(g, b.degrees, std::move(aligned));
}

Prop2Report verify_prop2(const Antimorphism& l, const MatrixCoeffBasis& b, const CharacterTable& t,
                         std::uint64_t seed, double tol) {
  const FiniteGroup& g = b.group;
  const std::size_t n = g.order();
  Prop2Report rep;
  const auto invariant = chi_L_invariance(t, l, tol);
  rep.characters_invariant = std::all_of(invariant.begin(), invariant.end(), [](bool x) { return x; });
  rep.fixed_points = l.fixed_point_count();
  for (long long d : t.degrees) rep.degree_sum += d;
  if (!rep.characters_invariant) rep.failed_hypothesis = "some character is not L-invariant";
  else if (static_cast<long long>(rep.fixed_points) != rep.degree_sum)
    rep.failed_hypothesis = "fixed points " + std::to_string(rep.fixed_points) + " != degree sum " +
                            std::to_string(rep.degree_sum);
  rep.hypotheses_hold = rep.failed_hypothesis.empty();

  // Permutation identities, exact. Pullbacks compose as (A B) <-> p_B o p_A.
  RegularSpace reg(g, n);
  const CountingFunction counting = counting_function(l, t.space);
  for (std::size_t h = 0; h < n; ++h) rep.trace_L_star += l(static_cast<Element>(h)) == h;
  rep.trace_matches_counting = rep.intertwining_exact = rep.commuting_exact = true;
  for (std::size_t x = 0; x < n; ++x) {
    const auto xe = static_cast<Element>(x);
    const auto rho = reg.rho_pullback(xe);
    const auto sigma = reg.sigma_pullback(g.inv(l(xe)));
    long long trace = 0;
    for (std::size_t h = 0; h < n; ++h) {
      const Element lhs = l(rho[h]);                     // rho_g L*
      const Element rhs = sigma[l(static_cast<Element>(h))];  // L* sigma_{L(g)^-1}
      if (lhs != rhs) rep.intertwining_exact = false;
      if (rho[sigma[h]] != sigma[rho[h]]) rep.commuting_exact = false;
      trace += lhs == h;
    }
    if (trace != counting.per_element[x]) rep.trace_matches_counting = false;
  }
  if (!rep.hypotheses_hold) return rep;

  std::vector<Element> l_pullback(l.map().begin(), l.map().end());
  const Operator l_star = reg.dense(l_pullback);
  rep.distance_unaligned = max_abs(l_star - build_T(b));
  const MatrixCoeffBasis aligned = align_to_antimorphism(l, b, seed, &rep.takagi_residual, &rep.symmetry_residual);
  rep.distance_aligned = max_abs(l_star - build_T(aligned));
  for (std::size_t k = 0; k < aligned.irreps.size(); ++k)
    for (std::size_t x = 0; x < n; ++x)
      rep.transpose_residual = std::max(rep.transpose_residual, max_abs(aligned.irreps[k][l(static_cast<Element>(x))] -
                                                            aligned.irreps[k][x].transpose()));
  return rep;
}

}  // namespace twistrace
