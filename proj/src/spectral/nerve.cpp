#include "phinkit/spectral/nerve.hpp"

#include "phinkit/error.hpp"

#include <bit>

namespace phinkit::spectral {

namespace {

int popcount(Mask m) { return std::popcount(m); }

// Position of component a inside J (number of smaller members).
int position(Mask J, unsigned a) { return popcount(J & ((Mask{1} << a) - 1)); }

std::vector<Mask> masks_of_size(std::size_t n, int size) {
  std::vector<Mask> out;
  for (Mask J = 1; J < (Mask{1} << n); ++J)
    if (popcount(J) == size) out.push_back(J);
  return out;
}

} // namespace

std::size_t NerveDatum::dim(Mask J, std::size_t s) const {
  auto it = strata.find(J);
  if (it == strata.end() || s >= it->second.size()) return 0;
  return it->second[s];
}

std::size_t NerveDatum::max_degree() const {
  std::size_t out = 0;
  for (const auto& [J, dims] : strata)
    for (std::size_t s = 0; s < dims.size(); ++s)
      if (dims[s]) out = std::max(out, s + 1);
  return out;
}

QMatrix NerveDatum::restriction(Mask from, Mask to, std::size_t s) const {
  const std::size_t a = dim(from, s), b = dim(to, s);
  auto it = restrictions.find({from, to});
  if (it != restrictions.end() && s < it->second.size()) return it->second[s];
  if (a == 0 || b == 0) return QMatrix(b, a);
  if (a == b) return QMatrix::identity(a);
  throw InvalidInput("missing restriction map between strata of different dimensions");
}

QMatrix NerveDatum::restriction_chain(Mask from, Mask to, std::size_t s) const {
  QMatrix acc = QMatrix::identity(dim(from, s));
  Mask cur = from;
  for (unsigned a = 0; a < components; ++a) {
    if (!(to >> a & 1) || (cur >> a & 1)) continue;
    const Mask next = cur | (Mask{1} << a);
    acc = restriction(cur, next, s) * acc;
    cur = next;
  }
  return acc;
}

int NerveDatum::weight(Mask J, std::size_t s) const {
  auto it = weights.find(J);
  if (it == weights.end() || s >= it->second.size()) return static_cast<int>(s);
  return it->second[s];
}

void NerveDatum::validate() const {
  if (components == 0 || components > 16) throw InvalidInput("nerve needs between 1 and 16 components");
  const Mask all = (Mask{1} << components) - 1;
  for (const auto& [J, dims] : strata)
    if (J == 0 || (J & ~all)) throw InvalidInput("stratum index outside the component set");
  for (const auto& [key, mats] : restrictions) {
    const auto [from, to] = key;
    if ((from & ~to) || popcount(to) != popcount(from) + 1 || (to & ~all) || from == 0)
      throw InvalidInput("restriction maps must go from J to J plus one component");
    for (std::size_t s = 0; s < mats.size(); ++s)
      if (mats[s].rows() != dim(to, s) || mats[s].cols() != dim(from, s))
        throw InvalidInput("restriction map has the wrong shape");
  }
  for (const auto& [J, w] : weights)
    if (!strata.count(J)) throw InvalidInput("weights given for an absent stratum");
  const std::size_t top = max_degree();
  for (Mask J = 1; J <= all; ++J)
    for (unsigned a = 0; a < components; ++a)
      for (unsigned b = a + 1; b < components; ++b) {
        if ((J >> a & 1) || (J >> b & 1)) continue;
        const Mask Ja = J | (Mask{1} << a), Jb = J | (Mask{1} << b), Jab = Ja | Jb;
        for (std::size_t s = 0; s < top; ++s)
          if (restriction(Ja, Jab, s) * restriction(J, Ja, s) != restriction(Jb, Jab, s) * restriction(J, Jb, s))
            throw PreconditionError("non-functorial restriction maps",
                                    "square over stratum " + std::to_string(J) + " does not commute");
      }
}

std::vector<std::vector<Mask>> lambda_flags(std::size_t n, std::size_t m) {
  if (n == 0 || n > 16) throw std::invalid_argument("lambda_flags: n must be in 1..16");
  const Mask all = (Mask{1} << n) - 1;
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> cur;
  auto extend = [&](auto&& self) -> void {
    if (cur.size() == m + 1) {
      out.push_back(cur);
      return;
    }
    for (Mask J = 1; J <= all; ++J) {
      if (!cur.empty() && (J == cur.back() || (cur.back() & ~J))) continue;
      cur.push_back(J);
      self(self);
      cur.pop_back();
    }
  };
  extend(extend);
  return out;
}

namespace {

// Layout of one Cech row: offsets of each (r+1)-fold stratum.
struct RowLayout {
  std::vector<std::vector<Mask>> masks; // masks[r]
  std::vector<std::map<Mask, std::size_t>> offset;
  std::vector<std::size_t> dims;
};

RowLayout layout(const NerveDatum& nd, std::size_t s) {
  RowLayout L;
  for (std::size_t r = 0; r < nd.components; ++r) {
    L.masks.push_back(masks_of_size(nd.components, static_cast<int>(r + 1)));
    std::map<Mask, std::size_t> off;
    std::size_t total = 0;
    for (Mask J : L.masks.back()) {
      off[J] = total;
      total += nd.dim(J, s);
    }
    L.offset.push_back(std::move(off));
    L.dims.push_back(total);
  }
  return L;
}

// Cech differential of row s from degree r to r + 1.
QMatrix cech_map(const NerveDatum& nd, const RowLayout& L, std::size_t s, std::size_t r) {
  QMatrix out(L.dims[r + 1], L.dims[r]);
  for (Mask J : L.masks[r]) {
    for (unsigned a = 0; a < nd.components; ++a) {
      if (J >> a & 1) continue;
      const Mask J2 = J | (Mask{1} << a);
      const QMatrix res = nd.restriction(J, J2, s);
      const Rational sign = position(J2, a) % 2 == 0 ? 1 : -1;
      const std::size_t ro = L.offset[r + 1].at(J2), co = L.offset[r].at(J);
      for (std::size_t i = 0; i < res.rows(); ++i)
        for (std::size_t j = 0; j < res.cols(); ++j) out(ro + i, co + j) += sign * res(i, j);
    }
  }
  return out;
}

} // namespace

GradedComplex cech_row(const NerveDatum& nd, std::size_t s) {
  const RowLayout L = layout(nd, s);
  std::vector<QMatrix> diffs;
  for (std::size_t r = 0; r < nd.components; ++r)
    diffs.push_back(r + 1 < nd.components ? cech_map(nd, L, s, r) : QMatrix(0, L.dims[r]));
  return GradedComplex(0, L.dims, std::move(diffs));
}

FilteredComplex cech_complex(const NerveDatum& nd) {
  nd.validate();
  const std::size_t top = std::max<std::size_t>(nd.max_degree(), 1);
  std::vector<RowLayout> rows;
  for (std::size_t s = 0; s < top; ++s) rows.push_back(layout(nd, s));
  const int max_n = static_cast<int>(nd.components - 1 + top - 1);

  // Basis of total degree n: for r = 0..n, the strata of size r+1 in row n-r.
  std::vector<std::size_t> dims(static_cast<std::size_t>(max_n + 1), 0);
  std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> block; // (r, s) -> offset
  std::vector<std::vector<int>> levels(dims.size()), weights(dims.size());
  block.resize(dims.size());
  for (int n = 0; n <= max_n; ++n)
    for (std::size_t r = 0; r < nd.components; ++r) {
      const int si = n - static_cast<int>(r);
      if (si < 0 || si >= static_cast<int>(top)) continue;
      const auto s = static_cast<std::size_t>(si);
      block[static_cast<std::size_t>(n)][{r, s}] = dims[static_cast<std::size_t>(n)];
      dims[static_cast<std::size_t>(n)] += rows[s].dims[r];
      for (Mask J : rows[s].masks[r])
        for (std::size_t k = 0; k < nd.dim(J, s); ++k) {
          levels[static_cast<std::size_t>(n)].push_back(static_cast<int>(r));
          weights[static_cast<std::size_t>(n)].push_back(nd.weight(J, s));
        }
    }
  std::vector<QMatrix> diffs;
  for (int n = 0; n <= max_n; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    QMatrix D(n < max_n ? dims[nn + 1] : 0, dims[nn]);
    if (n < max_n)
      for (const auto& [rs, co] : block[nn]) {
        const auto [r, s] = rs;
        if (r + 1 >= nd.components) continue;
        const QMatrix m = cech_map(nd, rows[s], s, r);
        const std::size_t ro = block[nn + 1].at({r + 1, s});
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j) D(ro + i, co + j) = m(i, j);
      }
    diffs.push_back(std::move(D));
  }
  FilteredComplex fc = filter_by_levels(GradedComplex(0, dims, std::move(diffs)), levels);
  fc.weights = std::move(weights);
  fc.validate();
  return fc;
}

GradedComplex lambda_complex(const NerveDatum& nd, std::size_t s) {
  std::vector<std::vector<std::vector<Mask>>> flags;
  std::vector<std::size_t> dims;
  std::vector<std::map<std::vector<Mask>, std::size_t>> offset;
  for (std::size_t m = 0; m < nd.components; ++m) {
    flags.push_back(lambda_flags(nd.components, m));
    std::map<std::vector<Mask>, std::size_t> off;
    std::size_t total = 0;
    for (const auto& f : flags.back()) {
      off[f] = total;
      total += nd.dim(f.back(), s);
    }
    offset.push_back(std::move(off));
    dims.push_back(total);
  }
  std::vector<QMatrix> diffs;
  for (std::size_t m = 0; m < nd.components; ++m) {
    if (m + 1 == nd.components) {
      diffs.emplace_back(0, dims[m]);
      continue;
    }
    QMatrix D(dims[m + 1], dims[m]);
    // The coface d_k^* sends the summand of d_k(lambda) into that of lambda.
    for (const auto& lam : flags[m + 1]) {
      const std::size_t ro = offset[m + 1].at(lam);
      for (std::size_t k = 0; k <= m + 1; ++k) {
        std::vector<Mask> face = lam;
        face.erase(face.begin() + static_cast<long>(k));
        const QMatrix res = nd.restriction_chain(face.back(), lam.back(), s);
        const Rational sign = k % 2 == 0 ? 1 : -1;
        const std::size_t co = offset[m].at(face);
        for (std::size_t i = 0; i < res.rows(); ++i)
          for (std::size_t j = 0; j < res.cols(); ++j) D(ro + i, co + j) += sign * res(i, j);
      }
    }
    diffs.push_back(std::move(D));
  }
  return GradedComplex(0, dims, std::move(diffs));
}

CechComparison cech_vs_total_check(const NerveDatum& nd) {
  nd.validate();
  const std::size_t top = std::max<std::size_t>(nd.max_degree(), 1);
  const std::size_t max_n = nd.components - 1 + top - 1;
  CechComparison cmp;
  cmp.cech_dims.assign(max_n + 1, 0);
  cmp.lambda_dims.assign(max_n + 1, 0);
  for (std::size_t s = 0; s < top; ++s) {
    const GradedComplex c = cech_row(nd, s), l = lambda_complex(nd, s);
    for (std::size_t r = 0; r < nd.components; ++r) {
      cmp.cech_dims[r + s] += c.cohomology_dim(static_cast<int>(r));
      cmp.lambda_dims[r + s] += l.cohomology_dim(static_cast<int>(r));
    }
  }
  cmp.equal = cmp.cech_dims == cmp.lambda_dims;
  return cmp;
}

} // namespace phinkit::spectral
