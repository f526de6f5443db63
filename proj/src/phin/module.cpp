#include "phinkit/phin/module.hpp"

#include "phinkit/error.hpp"
#include "phinkit/linalg/factor.hpp"
#include "phinkit/linalg/newton.hpp"

#include <map>

namespace phinkit::phin {

Integer PhiNModule::q() const { return linalg::ipow(Integer(p), a); }

void validate(const PhiNModule& D) {
  if (!linalg::is_prime(D.p) || D.a == 0 || D.d < 0)
    throw PreconditionError("bad parameters", "need p prime, a >= 1 and d >= 0");
  const std::size_t n = D.phi.rows();
  if (!D.phi.is_square() || D.N.rows() != n || D.N.cols() != n)
    throw PreconditionError("bad parameters", "phi and N must be square of the same size");
  if (D.fil.ambient_dim() != n) throw PreconditionError("filtration failure", "Hodge filtration has wrong dimension");
  if (linalg::determinant(D.phi) == 0) throw PreconditionError("non-invertible phi", "det(phi) = 0");
  if (!D.N.pow(static_cast<unsigned>(n)).is_zero()) throw PreconditionError("non-nilpotent N", "N^dim != 0");
  if (D.N * D.phi != D.phi * D.N * Rational(D.q()))
    throw PreconditionError("commutation failure", "N phi != q phi N");
  D.fil.validate();
  if (D.fil.orientation() != Orientation::decreasing)
    throw PreconditionError("filtration failure", "Hodge filtration must be decreasing");
  if (D.gamma_fil) {
    if (D.gamma_fil->ambient_dim() != n || D.gamma_fil->orientation() != Orientation::decreasing)
      throw PreconditionError("filtration failure", "gamma filtration must be decreasing on D");
    D.gamma_fil->validate();
  }
}

std::vector<SlopeComponent> slope_decomposition(const QMatrix& op, unsigned long p, unsigned long a) {
  const std::size_t n = op.rows();
  if (n == 0) return {};
  std::map<Rational, Polynomial> grouped;
  for (const auto& f : linalg::factor_rational(linalg::char_poly(op))) {
    const auto poly = linalg::newton_polygon(f.poly, p, a);
    if (poly.segments.size() != 1)
      throw PreconditionError("mixed-slope factor", "irreducible factor " + f.poly.to_string() +
                                                        " has roots of different valuations");
    auto [it, fresh] = grouped.try_emplace(poly.segments.front().slope, Polynomial::monomial(1, 0));
    it->second = it->second * f.poly.pow(f.multiplicity);
  }
  std::vector<SlopeComponent> out;
  for (const auto& [slope, g] : grouped) out.push_back({slope, linalg::kernel(g.evaluate(op))});
  return out;
}

} // namespace phinkit::phin
