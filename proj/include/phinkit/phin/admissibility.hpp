#pragma once

#include "phinkit/phin/numbers.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace phinkit::phin {

enum class Verdict { admissible, not_admissible, sampled_inconclusive };
std::string to_string(Verdict v);

struct AdmissibilityReport {
  Rational t_N;
  Rational t_H;
  Verdict verdict = Verdict::sampled_inconclusive;
  std::optional<Subspace> witness; ///< (phi, N)-stable with t_H > t_N
  bool certified = false;
  std::string method;              ///< which enumeration produced the verdict
  std::size_t subspaces_checked = 0;
};

struct AdmissibilityOptions {
  std::uint64_t seed = 0;
  std::size_t random_samples = 64;
  std::size_t max_candidates = 100000; ///< guard for the exact enumerations
};

/// Exact whenever phi or N is cyclic, because the stable subspaces then
/// form a finite list: for cyclic phi every phi-stable subspace is a sum of
/// kernels of powers of the irreducible factors of char(phi), and for cyclic
/// N every N-stable subspace is some ker N^k. Otherwise a seeded sample of
/// structured and random (phi, N)-closures is tested; a witness found there
/// is still definitive, but "admissible" is then reported uncertified.
AdmissibilityReport is_weakly_admissible(const PhiNModule& D, const AdmissibilityOptions& opts = {});

enum class Ordinarity { ordinary, not_ordinary, inconclusive };
std::string to_string(Ordinarity o);

struct OrdinaryReport {
  Ordinarity verdict = Ordinarity::inconclusive;
  bool integral_slopes = false;
  bool hodge_equals_newton = false;
  AdmissibilityReport admissibility;
};
OrdinaryReport is_ordinary(const PhiNModule& D, const AdmissibilityOptions& opts = {});

/// True when A^r and B^{d+1-r} are complementary for every r.
bool check_opposite(const IndexedFiltration& A, const IndexedFiltration& B, int d);

} // namespace phinkit::phin
