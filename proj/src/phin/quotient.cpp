#include "phinkit/phin/quotient.hpp"

#include "phinkit/phin/admissibility.hpp"
#include "phinkit/phin/monodromy.hpp"

namespace phinkit::phin {

using linalg::kernel;
using linalg::subspace_intersect;

namespace {

QMatrix power(const QMatrix& m, int k) {
  return k <= 0 ? QMatrix::identity(m.rows()) : m.pow(static_cast<unsigned>(k));
}

} // namespace

CbarQuotient cbar_quotient(const PhiNModule& D) {
  validate(D);
  const std::size_t n = D.dim();
  const Subspace kerN = kernel(D.N);
  CbarQuotient out;
  out.C = Subspace::zero(n);
  out.slope_zero_kernel = kerN;
  if (D.d % 2 == 0) {
    // ker N is phi-stable because N phi = q phi N.
    const auto comps = slope_decomposition(linalg::restrict_to(D.phi, kerN), D.p, D.a);
    const Subspace zero_local = slope_part(comps, kerN.dim(), [](const Rational& s) { return s == 0; });
    const Subspace rest_local = slope_part(comps, kerN.dim(), [](const Rational& s) { return s != 0; });
    out.slope_zero_kernel = linalg::embed(zero_local, kerN);
    out.C = linalg::embed(rest_local, kerN);
  } else {
    const auto comps = slope_decomposition(linalg::restrict_to(D.phi, kerN), D.p, D.a);
    out.slope_zero_kernel =
        linalg::embed(slope_part(comps, kerN.dim(), [](const Rational& s) { return s == 0; }), kerN);
  }
  out.projection = linalg::QuotientMap(Subspace::full(n), out.C);
  const auto& pr = out.projection;
  out.Dbar.p = D.p;
  out.Dbar.a = D.a;
  out.Dbar.d = D.d;
  out.Dbar.phi = pr.induced(D.phi, pr);
  out.Dbar.N = pr.induced(D.N, pr);
  out.Dbar.fil = D.fil.mapped(pr);
  out.Dbar.gamma_fil = gamma_filtration(D).mapped(pr);
  return out;
}

QuotientReport quotient_check(const PhiNModule& D) {
  const auto cq = cbar_quotient(D);
  const PhiNModule& B = cq.Dbar;
  const IndexedFiltration G = *B.gamma_fil;
  const IndexedFiltration Gfull = gamma_filtration(D);
  const int d = D.d;
  QuotientReport rep;
  rep.dim_C = cq.C.dim();

  if (d % 2 == 0) {
    const int t = d / 2;
    rep.C_meets_upper_gamma_trivially = subspace_intersect(cq.C, Gfull.at(t + 1)).is_zero();
    rep.C_inside_middle_gamma = Gfull.at(t).contains(cq.C);
    const QMatrix shifted = D.phi - QMatrix::identity(D.dim()) * Rational(linalg::ipow(D.q(), static_cast<unsigned long>(t)));
    rep.phi_scalar_on_C = linalg::apply(shifted, cq.C).is_zero();
  }
  rep.kernel_passes_to_quotient = cq.projection.image_of(kernel(D.N)) == kernel(B.N);

  rep.opposite.pass = check_opposite(B.fil, G, d);
  rep.opposite.detail = rep.opposite.pass ? "Hodge and Gamma filtrations are opposite on D/C"
                                          : "some Fil^r meets Gamma^{d+1-r} or dimensions do not add up";

  rep.frobenius.pass = G.is_stable_under(B.phi);
  if (!rep.frobenius.pass) rep.frobenius.detail = "Gamma filtration is not phi-stable";
  for (int r = 0; r <= d && rep.frobenius.pass; ++r) {
    const QMatrix shifted =
        B.phi - QMatrix::identity(B.dim()) * Rational(linalg::ipow(D.q(), static_cast<unsigned long>(d - r)));
    if (!G.at(r + 1).contains(linalg::apply(shifted, G.at(r)))) {
      rep.frobenius.pass = false;
      rep.frobenius.detail = "phi - q^{d-r} does not kill the graded piece r = " + std::to_string(r);
    }
  }
  if (rep.frobenius.pass) rep.frobenius.detail = "phi acts as q^{d-r} on every graded piece";
  // Everything must live in degrees 0..d.
  if (!G.at(0).is_full() || !G.at(d + 1).is_zero()) {
    rep.frobenius.pass = false;
    rep.frobenius.detail = "Gamma filtration is not concentrated in degrees 0..d";
  }

  rep.kernel_image.pass = true;
  for (int r = 0; r <= d + 1; ++r) {
    const Subspace g = G.at(r);
    if (kernel(power(B.N, d + 1 - r)) != g || linalg::image(power(B.N, r)) != g) {
      rep.kernel_image.pass = false;
      rep.kernel_image.detail = "Gamma^r differs from ker/im of N at r = " + std::to_string(r);
      break;
    }
  }
  if (rep.kernel_image.pass) rep.kernel_image.detail = "Gamma^r = ker N^{d+1-r} = im N^r for all r";
  for (int r = 0; r <= d; ++r) rep.gamma_graded_dims.push_back(G.at(r).dim() - G.at(r + 1).dim());
  return rep;
}

} // namespace phinkit::phin
