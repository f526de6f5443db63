#include "phinkit/phin/admissibility.hpp"

#include "phinkit/error.hpp"
#include "phinkit/linalg/factor.hpp"
#include "phinkit/phin/monodromy.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace phinkit::phin {

using linalg::is_stable;
using linalg::kernel;
using linalg::subspace_intersect;
using linalg::subspace_sum;

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::admissible: return "admissible";
  case Verdict::not_admissible: return "not_admissible";
  case Verdict::sampled_inconclusive: return "sampled_inconclusive";
  }
  return "?";
}

std::string to_string(Ordinarity o) {
  switch (o) {
  case Ordinarity::ordinary: return "ordinary";
  case Ordinarity::not_ordinary: return "not_ordinary";
  case Ordinarity::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Chains ker f(phi)^e, e = 0..m, for each irreducible factor f of char(phi)
// with multiplicity m. Returns nullopt when phi is not cyclic.
std::optional<std::vector<std::vector<Subspace>>> cyclic_phi_chains(const QMatrix& phi) {
  std::vector<std::vector<Subspace>> chains;
  for (const auto& f : linalg::factor_rational(linalg::char_poly(phi))) {
    const QMatrix fm = f.poly.evaluate(phi);
    if (kernel(fm).dim() != static_cast<std::size_t>(f.poly.degree())) return std::nullopt;
    std::vector<Subspace> chain;
    for (unsigned e = 0; e <= f.multiplicity; ++e) chain.push_back(kernel(fm.pow(e)));
    chains.push_back(std::move(chain));
  }
  return chains;
}

Subspace closure(const PhiNModule& D, Subspace s) {
  for (;;) {
    Subspace next = subspace_sum(s, subspace_sum(linalg::apply(D.phi, s), linalg::apply(D.N, s)));
    if (next == s) return s;
    s = std::move(next);
  }
}

class Search {
public:
  Search(const PhiNModule& D, AdmissibilityReport& rep) : D_(D), rep_(rep) {}

  // Returns true when a witness was found.
  bool test(const Subspace& s) {
    if (s.is_zero() || s.is_full() || !seen_.insert(key(s)).second) return false;
    ++rep_.subspaces_checked;
    const auto t = t_numbers(D_, s);
    if (t.t_N < t.t_H) {
      rep_.witness = s;
      return true;
    }
    return false;
  }

private:
  static std::vector<std::string> key(const Subspace& s) {
    std::vector<std::string> k;
    for (std::size_t i = 0; i < s.basis().rows(); ++i)
      for (std::size_t j = 0; j < s.basis().cols(); ++j) k.push_back(s.basis()(i, j).get_str());
    return k;
  }
  const PhiNModule& D_;
  AdmissibilityReport& rep_;
  std::set<std::vector<std::string>> seen_;
};

bool enumerate_phi_cyclic(const PhiNModule& D, const std::vector<std::vector<Subspace>>& chains, Search& search,
                          std::size_t max_candidates) {
  std::size_t total = 1;
  for (const auto& c : chains) {
    total *= c.size();
    if (total > max_candidates) throw PreconditionError("budget exceeded", "too many phi-stable subspaces");
  }
  std::vector<std::size_t> idx(chains.size(), 0);
  for (std::size_t count = 0; count < total; ++count) {
    Subspace s = Subspace::zero(D.dim());
    for (std::size_t k = 0; k < chains.size(); ++k) s = subspace_sum(s, chains[k][idx[k]]);
    if (is_stable(D.N, s) && search.test(s)) return true;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (++idx[k] < chains[k].size()) break;
      idx[k] = 0;
    }
  }
  return false;
}

bool enumerate_sampled(const PhiNModule& D, const AdmissibilityOptions& opts, Search& search) {
  const std::size_t n = D.dim();
  const auto comps = slope_decomposition(D.phi, D.p, D.a);
  std::vector<Subspace> blocks;
  for (const auto& f : linalg::factor_rational(linalg::char_poly(D.phi)))
    blocks.push_back(kernel(f.poly.pow(f.multiplicity).evaluate(D.phi)));
  std::vector<Subspace> n_pieces;
  for (std::size_t k = 0; k <= n; ++k) {
    const QMatrix Nk = D.N.pow(static_cast<unsigned>(k));
    n_pieces.push_back(kernel(Nk));
    n_pieces.push_back(linalg::image(Nk));
  }
  // Structured candidates: sums of primary blocks cut by the kernel and
  // image flags of N, then closed under phi and N.
  const std::size_t nb = std::min<std::size_t>(blocks.size(), 12);
  for (std::size_t mask = 1; mask < (std::size_t{1} << nb); ++mask) {
    Subspace s = Subspace::zero(n);
    for (std::size_t k = 0; k < nb; ++k)
      if (mask >> k & 1) s = subspace_sum(s, blocks[k]);
    for (const auto& piece : n_pieces)
      if (search.test(closure(D, subspace_intersect(s, piece)))) return true;
  }
  for (const auto& c : comps)
    if (search.test(closure(D, c.space))) return true;
  // Random closures of one or two vectors with small integer entries.
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (std::size_t s = 0; s < opts.random_samples; ++s) {
    std::vector<linalg::QVector> gens(1 + s % 2, linalg::QVector(n));
    for (auto& g : gens)
      for (auto& x : g) x = coeff(rng);
    if (search.test(closure(D, Subspace::span(gens, n)))) return true;
  }
  return false;
}

} // namespace

AdmissibilityReport is_weakly_admissible(const PhiNModule& D, const AdmissibilityOptions& opts) {
  validate(D);
  AdmissibilityReport rep;
  const auto t = t_numbers(D);
  rep.t_N = t.t_N;
  rep.t_H = t.t_H;
  const std::size_t n = D.dim();

  if (t.t_N < t.t_H) {
    rep.verdict = Verdict::not_admissible;
    rep.certified = true;
    rep.method = "global";
    rep.witness = Subspace::full(n);
    return rep;
  }
  if (t.t_N != t.t_H) {
    rep.verdict = Verdict::not_admissible;
    rep.certified = true;
    rep.method = "global";
    return rep;
  }

  Search search(D, rep);
  bool found = false;
  if (auto chains = cyclic_phi_chains(D.phi)) {
    rep.method = "exact: cyclic phi";
    rep.certified = true;
    found = enumerate_phi_cyclic(D, *chains, search, opts.max_candidates);
  } else if (n > 0 && linalg::rank(D.N) + 1 == n) {
    rep.method = "exact: cyclic N";
    rep.certified = true;
    for (std::size_t k = 1; k < n && !found; ++k) {
      const Subspace s = kernel(D.N.pow(static_cast<unsigned>(k)));
      found = is_stable(D.phi, s) && search.test(s);
    }
  } else {
    rep.method = "sampled";
    found = enumerate_sampled(D, opts, search);
    // A violating subspace settles the question regardless of how it was found.
    rep.certified = found;
  }
  rep.verdict = found ? Verdict::not_admissible
                      : (rep.certified ? Verdict::admissible : Verdict::sampled_inconclusive);
  return rep;
}

OrdinaryReport is_ordinary(const PhiNModule& D, const AdmissibilityOptions& opts) {
  OrdinaryReport rep;
  rep.admissibility = is_weakly_admissible(D, opts);
  const auto newton = newton_numbers(D);
  rep.integral_slopes = std::all_of(newton.begin(), newton.end(),
                                    [](const auto& kv) { return kv.first.get_den() == 1 && kv.first >= 0; });
  rep.hodge_equals_newton = rep.integral_slopes;
  if (rep.integral_slopes) {
    GradedDims as_int;
    for (const auto& [slope, mult] : newton) as_int[static_cast<int>(slope.get_num().get_si())] = mult;
    rep.hodge_equals_newton = as_int == hodge_numbers(D);
  }
  if (!rep.integral_slopes || !rep.hodge_equals_newton || rep.admissibility.verdict == Verdict::not_admissible)
    rep.verdict = Ordinarity::not_ordinary;
  else if (rep.admissibility.verdict == Verdict::admissible)
    rep.verdict = Ordinarity::ordinary;
  else
    rep.verdict = Ordinarity::inconclusive;
  return rep;
}

bool check_opposite(const IndexedFiltration& A, const IndexedFiltration& B, int d) {
  if (A.ambient_dim() != B.ambient_dim()) throw std::invalid_argument("check_opposite: ambient mismatch");
  const std::size_t n = A.ambient_dim();
  // Outside this window one side is zero and the other is everything.
  const int lo = std::min(A.first(), d + 1 - B.last()) - 1;
  const int hi = std::max(A.last(), d + 1 - B.first()) + 1;
  for (int r = lo; r <= hi; ++r) {
    const Subspace a = A.at(r), b = B.at(d + 1 - r);
    if (a.dim() + b.dim() != n || !subspace_intersect(a, b).is_zero()) return false;
  }
  return true;
}

} // namespace phinkit::phin
