#pragma once

#include <optional>
#include <vector>

#include "chernlab/presented_ring.hpp"

namespace chernlab {

// Monomial ideal of the ambient ring, kept as its unique minimal generators.
struct MonomialIdeal {
  RingP ring;
  std::vector<Monomial> gens;

  static MonomialIdeal make(RingP ring, std::vector<Monomial> gens);
  // Succeeds when every generator of I (reduced) is a single term and the
  // ambient relations are zero, so the ideal is genuinely monomial.
  static std::optional<MonomialIdeal> from_ideal(const RingIdeal& I);

  bool is_zero() const { return gens.empty(); }
  bool contains(const Monomial& m) const;
  RingIdeal to_ideal(const PRingP& ring) const;
};

MonomialIdeal monomial_ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal monomial_ideal_power(const MonomialIdeal& a, int n);

// Closed convex hull of the generator exponents plus the positive orthant,
// represented by the finite inequality system cutting it out.  Lattice
// membership in this region is exactly membership in the integral closure.
class NewtonRegion {
public:
  explicit NewtonRegion(const MonomialIdeal& I);
  bool contains(const Monomial& m) const;

private:
  int nvars_;
  // Each inequality reads <w, x> >= c with w componentwise nonnegative.
  std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> ineqs_;
};

// Integral closure of a monomial ideal: minimal monomial generators of the
// set of lattice points of the Newton region.
MonomialIdeal monomial_integral_closure(const MonomialIdeal& I);

// Integral closure of I^n for an ideal whose reduction is monomial; throws
// PreconditionError otherwise.
RingIdeal integral_closure_power(const RingIdeal& I, int n);

}  // namespace chernlab
