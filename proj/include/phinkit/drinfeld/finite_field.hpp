#pragma once

#include <cstdint>
#include <vector>

namespace phinkit::drinfeld {

/// F_q for a prime power q <= 2^12, with elements 0..q-1 read as base-p
/// digit vectors of polynomials modulo a fixed irreducible. Addition and
/// multiplication are table driven.
class FiniteField {
public:
  explicit FiniteField(unsigned q);

  unsigned order() const noexcept { return q_; }
  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  unsigned inv(unsigned a) const;
  unsigned pow(unsigned a, unsigned long k) const;

  /// Elements x with x^{q0} = x; q0 must be a power of p whose exponent divides e.
  std::vector<unsigned> subfield(unsigned q0) const;

private:
  unsigned q_, p_, e_;
  std::vector<unsigned> add_, mul_, neg_, inv_;
};

/// Vectors over a finite field.
using FVector = std::vector<unsigned>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(const FiniteField& F, std::vector<FVector>& rows);
/// Basis of {x : a . x = 0 for every row a}.
std::vector<FVector> null_space(const FiniteField& F, std::vector<FVector> rows, std::size_t n);
unsigned dot(const FiniteField& F, const FVector& a, const FVector& b);
/// Scales so that the first nonzero entry is 1.
FVector normalize(const FiniteField& F, FVector v);
/// All normalised nonzero vectors of F^n, i.e. the points of P^{n-1}.
std::vector<FVector> projective_space(const FiniteField& F, std::size_t n);

} // namespace phinkit::drinfeld
